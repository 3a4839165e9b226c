#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qsampling/closed_form.hpp"
#include "qsampling/quadrature.hpp"
#include "qsampling/sampling.hpp"
#include "qsampling/scenario.hpp"
#include "qsampling/simulate.hpp"
#include "qsampling/special_functions.hpp"

namespace py = pybind11;
using namespace qsampling;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Closed-form Rayleigh-fading BER approximations and oracles";

  m.def("gaussian_q", &gaussian_q, py::arg("x"));
  m.def("gaussian_q_inv", &gaussian_q_inv, py::arg("p"));
  m.def("chernoff_bound", &chernoff_bound, py::arg("x"));
  m.def("exp_lower_bound", &exp_lower_bound, py::arg("x"));

  m.def("critical_point_1d", &critical_point_1d, py::arg("scale_a"));
  m.def("critical_point_2d", &critical_point_2d, py::arg("a1"), py::arg("a2"));
  m.def("impulse_weight_1d", &impulse_weight_1d, py::arg("scale_a"));
  m.def("impulse_weight_2d", &impulse_weight_2d, py::arg("a1"), py::arg("a2"));

  m.def("gamma_eq", &gamma_eq, py::arg("snr_sr"), py::arg("snr_rd"));

  py::class_<GainTerm>(m, "GainTerm")
      .def_readonly("amplitude", &GainTerm::amplitude)
      .def_readonly("exponent_sum", &GainTerm::exponent_sum);

  py::class_<ClosedFormBer>(m, "ClosedFormBer")
      .def_readonly("value", &ClosedFormBer::value)
      .def_readonly("diversity_order", &ClosedFormBer::diversity_order)
      .def_readonly("mean_snr", &ClosedFormBer::mean_snr)
      .def_readonly("terms", &ClosedFormBer::terms)
      .def("evaluate_terms", &ClosedFormBer::evaluate_terms);

  m.def("approx_i0", &approx_i0, py::arg("mean_snr"),
        py::arg("midband_boundary") = 1.0);
  m.def("approx_i1", &approx_i1, py::arg("mean_snr"), py::arg("a1"),
        py::arg("a2"));
  m.def("approx_i2", &approx_i2, py::arg("mean_snr"));
  m.def("approx_relay", &approx_relay, py::arg("mean_snr"));
  m.def("approx_network_node1", &approx_network_node1, py::arg("mean_snr"));

  m.def(
      "expect_q_1d",
      [](double s, double a) { return expect_q_1d(s, a); }, py::arg("mean_snr"),
      py::arg("scale_a"));
  m.def(
      "expect_q_2d",
      [](double s, double a1, double a2) { return expect_q_2d(s, a1, a2); },
      py::arg("mean_snr"), py::arg("a1"), py::arg("a2"));
  m.def(
      "expect_min_2d", [](double s) { return expect_min_2d(s); },
      py::arg("mean_snr"));
  m.def(
      "expect_relay_3d", [](double s) { return expect_relay_3d(s); },
      py::arg("mean_snr"));

  py::class_<SimEstimate>(m, "SimEstimate")
      .def_readonly("mean", &SimEstimate::mean)
      .def_readonly("std_error", &SimEstimate::std_error)
      .def_readonly("trials", &SimEstimate::trials)
      .def_readonly("seed", &SimEstimate::seed)
      .def_readonly("low_confidence", &SimEstimate::low_confidence);

  m.def(
      "simulate_relay_symbol",
      [](double mean_snr, std::uint64_t trials, std::uint64_t seed) {
        ChannelConfig cfg;
        cfg.mean_snr = mean_snr;
        return simulate_relay_symbol(cfg, trials, seed);
      },
      py::arg("mean_snr"), py::arg("trials"), py::arg("seed"),
      py::call_guard<py::gil_scoped_release>());
  m.def(
      "semi_analytic_relay",
      [](double mean_snr, std::uint64_t trials, std::uint64_t seed) {
        ChannelConfig cfg;
        cfg.mean_snr = mean_snr;
        return semi_analytic_relay(cfg, trials, seed);
      },
      py::arg("mean_snr"), py::arg("trials"), py::arg("seed"),
      py::call_guard<py::gil_scoped_release>());
  m.def(
      "simulate_network_node1",
      [](double mean_snr, std::uint64_t trials, std::uint64_t seed) {
        ChannelConfig cfg;
        cfg.mean_snr = mean_snr;
        return simulate_network_node1(cfg, trials, seed);
      },
      py::arg("mean_snr"), py::arg("trials"), py::arg("seed"),
      py::call_guard<py::gil_scoped_release>());
}
