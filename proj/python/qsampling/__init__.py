"""Closed-form Rayleigh-fading BER approximations with quadrature and
Monte Carlo oracles. Thin wrapper around the compiled _core module."""

import os


def _load_core():
    try:
        from . import _core  # installed layout
        return _core
    except ImportError:
        pass
    # development layout: extension lives in the build tree
    core_dir = os.environ.get("QSAMPLING_CORE_DIR")
    if not core_dir:
        raise ImportError(
            "qsampling._core not found; build the extension or set "
            "QSAMPLING_CORE_DIR to the directory containing it")
    import importlib.util
    import sys
    for name in os.listdir(core_dir):
        if name.startswith("_core") and name.endswith((".so", ".pyd")):
            path = os.path.join(core_dir, name)
            spec = importlib.util.spec_from_file_location(
                __name__ + "._core", path)
            mod = importlib.util.module_from_spec(spec)
            sys.modules[spec.name] = mod
            spec.loader.exec_module(mod)
            return mod
    raise ImportError(f"no _core extension found in {core_dir}")


_core = _load_core()

gaussian_q = _core.gaussian_q
gaussian_q_inv = _core.gaussian_q_inv
chernoff_bound = _core.chernoff_bound
exp_lower_bound = _core.exp_lower_bound
critical_point_1d = _core.critical_point_1d
critical_point_2d = _core.critical_point_2d
impulse_weight_1d = _core.impulse_weight_1d
impulse_weight_2d = _core.impulse_weight_2d
gamma_eq = _core.gamma_eq
GainTerm = _core.GainTerm
ClosedFormBer = _core.ClosedFormBer
approx_i0 = _core.approx_i0
approx_i1 = _core.approx_i1
approx_i2 = _core.approx_i2
approx_relay = _core.approx_relay
approx_network_node1 = _core.approx_network_node1
expect_q_1d = _core.expect_q_1d
expect_q_2d = _core.expect_q_2d
expect_min_2d = _core.expect_min_2d
expect_relay_3d = _core.expect_relay_3d
SimEstimate = _core.SimEstimate
simulate_relay_symbol = _core.simulate_relay_symbol
semi_analytic_relay = _core.semi_analytic_relay
simulate_network_node1 = _core.simulate_network_node1

__all__ = [
    "gaussian_q", "gaussian_q_inv", "chernoff_bound", "exp_lower_bound",
    "critical_point_1d", "critical_point_2d", "impulse_weight_1d",
    "impulse_weight_2d", "gamma_eq", "GainTerm", "ClosedFormBer",
    "approx_i0", "approx_i1", "approx_i2", "approx_relay",
    "approx_network_node1", "expect_q_1d", "expect_q_2d", "expect_min_2d",
    "expect_relay_3d", "SimEstimate", "simulate_relay_symbol",
    "semi_analytic_relay", "simulate_network_node1",
]
