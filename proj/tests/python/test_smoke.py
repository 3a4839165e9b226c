import math

import pytest

import qsampling as qs


def test_q_function():
    assert qs.gaussian_q(0.0) == pytest.approx(0.5)
    assert qs.gaussian_q(1.0) == pytest.approx(0.15865525393145705, rel=1e-12)
    assert qs.gaussian_q_inv(qs.gaussian_q(2.3)) == pytest.approx(2.3, rel=1e-9)


def test_critical_points():
    assert qs.critical_point_1d(1.0) == pytest.approx(1.417531332555363, rel=1e-9)
    x, y = qs.critical_point_2d(2.0, 2.0)
    assert x == pytest.approx(y, rel=1e-12)
    assert x == pytest.approx(0.8207110146140488, rel=1e-9)
    assert qs.impulse_weight_1d(2.0) == pytest.approx(0.25)
    assert qs.impulse_weight_2d(2.0, 2.0) == pytest.approx(3.0 / 16.0)


def test_closed_forms_track_oracles():
    cf = qs.approx_i0(10.0)
    assert cf.value == pytest.approx(qs.expect_q_1d(10.0, 1.0), rel=0.005)
    assert cf.diversity_order == 1
    assert len(cf.terms) == 1
    assert cf.evaluate_terms() == pytest.approx(cf.value, rel=1e-12)

    v1 = qs.approx_i1(100.0, 2.0, 2.0)
    assert v1.value == pytest.approx(qs.expect_q_2d(100.0, 2.0, 2.0), rel=0.10)

    relay = qs.approx_relay(100.0)
    assert relay.diversity_order == 2
    assert relay.value == pytest.approx(qs.expect_relay_3d(100.0), rel=0.10)

    net = qs.approx_network_node1(100.0)
    assert relay.value < net.value < 2.0 * relay.value


def test_gamma_eq():
    g = qs.gamma_eq(1.0, 1.0)
    assert 0.0 < g < 1.0
    assert qs.gamma_eq(3.0, 7.0) == pytest.approx(qs.gamma_eq(7.0, 3.0))


def test_simulation_determinism():
    a = qs.semi_analytic_relay(10.0, 100000, 99)
    b = qs.semi_analytic_relay(10.0, 100000, 99)
    assert a.mean == b.mean
    assert a.std_error == b.std_error
    assert a.trials == 100000
    assert abs(a.mean - qs.expect_relay_3d(10.0)) < 4.0 * a.std_error

    sym = qs.simulate_relay_symbol(10.0, 200000, 7)
    assert 0.0 < sym.mean < 0.5
    assert not math.isnan(sym.std_error)
