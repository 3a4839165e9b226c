#include <cmath>
#include <stdexcept>
#include <random>

#include "doctest.h"
#include "qsampling/quadrature.hpp"
#include "qsampling/sampling.hpp"
#include "qsampling/special_functions.hpp"

using namespace qsampling;

TEST_CASE("finite_n_integrand_1d with N=1 is the untransformed integrand") {
  IntegrandFactors f{1.0, 1.0, 1};
  for (double x : {0.2, 0.7, 1.5, 4.0}) {
    const auto v = finite_n_integrand_1d(f, x);
    CHECK(v.full_value ==
          doctest::Approx(gaussian_q(std::sqrt(x)) * std::exp(-x))
              .epsilon(1e-12));
    CHECK(v.h_value == doctest::Approx(gaussian_q(std::sqrt(x))).epsilon(1e-12));
  }
}

TEST_CASE("finite_n_integrand_1d saturates instead of crashing") {
  IntegrandFactors f{2.0, 1.0, 1000};
  CHECK(finite_n_integrand_1d(f, 0.5).full_value < 1e-100);
  // far above t=1 the exponential pdf kills everything
  CHECK(finite_n_integrand_1d(f, 5.0).full_value == 0.0);
  CHECK(std::isfinite(finite_n_integrand_1d(f, 1.0).full_value));
  CHECK_THROWS_AS(finite_n_integrand_1d(f, 0.0), std::domain_error);
}

TEST_CASE("h concentrates near t=1 for large N") {
  IntegrandFactors f{2.0, 1.0, 1000};
  double best_t = 0.0, best_h = -1.0;
  for (double t = 0.5; t <= 1.5; t += 1e-4) {
    const double h = finite_n_integrand_1d(f, t).h_value;
    if (h > best_h) {
      best_h = h;
      best_t = t;
    }
  }
  CHECK(best_t > 0.99);
  CHECK(best_t < 1.01);
}

TEST_CASE("critical_point_1d") {
  // asymptotic stationarity solution, frozen at high precision
  CHECK(critical_point_1d(1.0) ==
        doctest::Approx(1.417531332555363).epsilon(1e-9));
  CHECK(critical_point_1d(2.0) ==
        doctest::Approx(0.7087656662776815).epsilon(1e-9));
  // values reported for the finite-N numerical search
  CHECK(std::abs(critical_point_1d(1.0) - 1.4157) < 5e-3);
  CHECK(std::abs(critical_point_1d(2.0) - 0.7079) < 5e-3);
  // scaling under x' = a x
  for (double a : {0.5, 4.0}) {
    CHECK(critical_point_1d(a) ==
          doctest::Approx(critical_point_1d(1.0) / a).epsilon(1e-12));
  }
  // stationarity residual at the returned point
  for (double a : {0.5, 1.0, 2.0, 4.0}) {
    const double x = critical_point_1d(a);
    const double z = std::sqrt(a * x);
    CHECK(std::abs(z * gaussian_pdf(z) - 2.0 * gaussian_q(z)) < 1e-8);
  }
}

TEST_CASE("finite-N grid maximizer converges to the asymptotic point") {
  const double target = critical_point_1d(2.0);
  double prev_err = 1e9;
  for (int n : {10, 100, 1000}) {
    IntegrandFactors f{2.0, 1.0, n};
    double best_x = 0.0, best_h = -1.0;
    for (double x = 0.05; x <= 3.0; x += 1e-4) {
      const double t = std::pow(x, 1.0 / n);
      const double h = finite_n_integrand_1d(f, t).h_value;
      if (h > best_h) {
        best_h = h;
        best_x = x;
      }
    }
    const double err = std::abs(best_x - target);
    CHECK(err < prev_err);
    prev_err = err;
  }
  CHECK(prev_err < 2e-3);
}

TEST_CASE("critical_point_2d") {
  const auto [x, y] = critical_point_2d(2.0, 2.0);
  CHECK(x == doctest::Approx(0.8207110146140488).epsilon(1e-9));
  CHECK(y == x);
  CHECK(std::abs(x - 0.8197) < 5e-3);

  const auto [x11, y11] = critical_point_2d(1.0, 1.0);
  CHECK(x11 == doctest::Approx(1.6414220292280975).epsilon(1e-9));

  // symmetry under relabeling
  const auto [xa, ya] = critical_point_2d(0.7, 3.1);
  const auto [xb, yb] = critical_point_2d(3.1, 0.7);
  CHECK(xa == doctest::Approx(yb).epsilon(1e-12));
  CHECK(ya == doctest::Approx(xb).epsilon(1e-12));

  // scaling against the unit-scale solution
  for (auto [a1, a2] : {std::pair{0.5, 4.0}, std::pair{2.5, 1.3}}) {
    const auto [sx, sy] = critical_point_2d(a1, a2);
    CHECK(sx == doctest::Approx(x11 / a1).epsilon(1e-6));
    CHECK(sy == doctest::Approx(y11 / a2).epsilon(1e-6));
  }
}

TEST_CASE("impulse weights and quadrature cross-checks") {
  CHECK(impulse_weight_1d(1.0) == doctest::Approx(0.5));
  CHECK(impulse_weight_1d(2.0) == doctest::Approx(0.25));
  CHECK(impulse_weight_2d(2.0, 2.0) == doctest::Approx(0.1875));
  CHECK(impulse_weight_2d(1.0, 1.0) == doctest::Approx(0.75));

  QuadratureSpec spec;
  spec.rel_tol = 1e-9;
  const double w1 = integrate(
      [](double x) { return gaussian_q(std::sqrt(2.0 * x)); }, 0.0, 200.0,
      spec);
  CHECK(w1 == doctest::Approx(0.25).epsilon(1e-6));

  const double w2 = integrate(
      [&](double x) {
        return integrate(
            [&](double y) { return gaussian_q(std::sqrt(x + 3.0 * y)); }, 0.0,
            200.0, spec);
      },
      0.0, 400.0, spec);
  CHECK(w2 == doctest::Approx(0.25).epsilon(1e-4));

  std::mt19937_64 gen(11);
  std::uniform_real_distribution<double> u(0.5, 4.0);
  for (int i = 0; i < 5; ++i) {
    const double a1 = u(gen), a2 = u(gen);
    const double num = integrate(
        [&](double x) {
          return integrate(
              [&](double y) { return gaussian_q(std::sqrt(a1 * x + a2 * y)); },
              0.0, 200.0 / a2, spec);
        },
        0.0, 200.0 / a1, spec);
    CHECK(num == doctest::Approx(impulse_weight_2d(a1, a2)).epsilon(1e-4));
  }
}

TEST_CASE("mass concentration at N=1000") {
  IntegrandFactors f{2.0, 1.0, 1000};
  QuadratureSpec spec;
  spec.rel_tol = 1e-7;
  spec.abs_tol = 1e-16;
  auto full = [&](double t) { return finite_n_integrand_1d(f, t).full_value; };
  const double peak = integrate(full, 0.9, 1.1, spec);
  const double rest = integrate(full, 1e-6, 0.9, spec) +
                      integrate(full, 1.1, 10.0, spec);
  CHECK(peak / (peak + rest) >= 0.99);
}

TEST_CASE("pdf_sampler_location") {
  CHECK(pdf_sampler_location(10.0, 1000) == doctest::Approx(9.99));
  CHECK(pdf_sampler_location(10.0, infinite_order) == doctest::Approx(10.0));
  CHECK(pdf_sampler_location(5.0, 1) == doctest::Approx(0.0));
  CHECK_THROWS_AS(pdf_sampler_location(-1.0, 10), std::domain_error);
}

TEST_CASE("regime_select") {
  CHECK(regime_select(10.0).kind == SamplerKind::q_sampler);
  CHECK(regime_select(0.2).kind == SamplerKind::pdf_sampler);
  // midband rule: boundary at s = 1, inclusive on the Q side
  CHECK(regime_select(1.0).kind == SamplerKind::q_sampler);
  CHECK(regime_select(0.99).kind == SamplerKind::pdf_sampler);
  // boundary is configurable
  CHECK(regime_select(1.5, 1.8).kind == SamplerKind::pdf_sampler);
  const Regime r = regime_select(5.0);
  CHECK(r.threshold_high == doctest::Approx(2.0));
  CHECK(r.threshold_low == doctest::Approx(1.0 / 3.0));
}
