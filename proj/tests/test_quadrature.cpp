#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "qsampling/quadrature.hpp"
#include "qsampling/scenario.hpp"
#include "qsampling/simulate.hpp"
#include "qsampling/special_functions.hpp"

using namespace qsampling;

namespace {
double analytic_expect_q(double s, double a) {
  return 0.5 * (1.0 - std::sqrt(a * s / (a * s + 2.0)));
}
}  // namespace

TEST_CASE("integrate basics") {
  CHECK(integrate([](double x) { return std::sin(x); }, 0.0, M_PI) ==
        doctest::Approx(2.0).epsilon(1e-10));
  QuadratureSpec tiny;
  tiny.max_subdivisions = 2;
  tiny.rel_tol = 1e-14;
  tiny.abs_tol = 0.0;
  CHECK_THROWS_AS(
      integrate([](double x) { return std::sqrt(std::abs(x - 0.3217)); }, 0.0,
                1.0, tiny),
      ConvergenceError);
  try {
    integrate([](double x) { return std::sqrt(std::abs(x - 0.3217)); }, 0.0,
              1.0, tiny);
  } catch (const ConvergenceError& e) {
    // the partial estimate is already close to the true value
    // (2/3)(0.3217^1.5 + 0.6783^1.5) = 0.49415
    CHECK(e.best_estimate() == doctest::Approx(0.49415).epsilon(2e-2));
  }
}

TEST_CASE("expect_q_1d matches the analytic identity") {
  for (double s : {0.1, 0.5, 1.0, 2.0, 10.0, 100.0}) {
    for (double a : {0.5, 1.0, 2.0}) {
      CHECK(expect_q_1d(s, a) ==
            doctest::Approx(analytic_expect_q(s, a)).epsilon(1e-7));
    }
  }
  CHECK(expect_q_1d(10.0, 1.0) ==
        doctest::Approx(0.04356453541236156).epsilon(1e-7));
  // s -> 0 gives the pure-guessing limit
  CHECK(expect_q_1d(1e-6, 1.0) == doctest::Approx(0.5).epsilon(1e-3));
}

TEST_CASE("expect_q_1d tolerance and truncation robustness") {
  QuadratureSpec half;
  half.rel_tol = 0.5e-8;
  const double v1 = expect_q_1d(5.0, 1.0);
  const double v2 = expect_q_1d(5.0, 1.0, half);
  CHECK(std::abs(v1 - v2) <= 1e-8);

  QuadratureSpec wide;
  wide.truncation_multiplier = 80.0;
  CHECK(std::abs(expect_q_1d(5.0, 1.0, wide) - v1) < 1e-12);
}

TEST_CASE("expect_q_2d") {
  // exact two-branch MRC average for a1 = a2 = 2
  CHECK(expect_q_2d(100.0, 2.0, 2.0) ==
        doctest::Approx(1.8441552901498663e-5).epsilon(1e-6));
  CHECK(expect_q_2d(3.0, 1.2, 2.7) ==
        doctest::Approx(expect_q_2d(3.0, 2.7, 1.2)).epsilon(1e-7));
  // adding a second branch can only help
  CHECK(expect_q_2d(2.0, 1.0, 3.0) <= expect_q_1d(2.0, 1.0));
}

TEST_CASE("expect_min_2d reduces to the order-statistics identity") {
  for (double s : {0.5, 2.0, 10.0, 100.0}) {
    CHECK(expect_min_2d(s) ==
          doctest::Approx(expect_q_1d(0.5 * s, 2.0)).epsilon(1e-7));
  }
  CHECK(expect_min_2d(1e-6) == doctest::Approx(0.5).epsilon(1e-3));
}

TEST_CASE("expect_relay_3d") {
  // uninformative limit and monotonicity
  CHECK(expect_relay_3d(0.01) > 0.4);
  const double v1 = expect_relay_3d(1.0);
  const double v10 = expect_relay_3d(10.0);
  const double v100 = expect_relay_3d(100.0);
  CHECK(v1 > v10);
  CHECK(v10 > v100);

  // cross-oracle agreement with the semi-analytic Monte Carlo estimate
  ChannelConfig cfg;
  cfg.mean_snr = 100.0;
  const SimEstimate mc = semi_analytic_relay(cfg, 2'000'000, 31337);
  CHECK(std::abs(v100 - mc.mean) <= 3.0 * mc.std_error);
}
