#include "qsampling/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qsampling/closed_form.hpp"
#include "qsampling/quadrature.hpp"
#include "qsampling/sampling.hpp"
#include "qsampling/scenario.hpp"
#include "qsampling/simulate.hpp"
#include "qsampling/special_functions.hpp"

namespace qsampling {

namespace {

using Clock = std::chrono::steady_clock;

struct Reporter {
  std::ostream& out;
  bool all_passed = true;

  void report(int criterion, const std::string& name, bool passed,
              const std::string& detail, double seconds) {
    out << (passed ? "PASS" : "FAIL") << " criterion " << criterion << " ("
        << name << "): " << detail << " [" << std::fixed
        << std::setprecision(1) << seconds << " s]\n";
    out.unsetf(std::ios::fixed);
    all_passed = all_passed && passed;
  }
};

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

double rel_err(double approx, double exact) {
  return std::abs(approx - exact) / std::abs(exact);
}

void criterion_critical_points(Reporter& r) {
  const auto t0 = Clock::now();
  const double c1 = critical_point_1d(1.0);
  const double c2 = critical_point_1d(2.0);
  const auto [x, y] = critical_point_2d(2.0, 2.0);
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  const bool ok = std::abs(c1 - 1.4157) <= 5e-3 &&
                  std::abs(c2 - 0.7079) <= 5e-3 &&
                  std::abs(x - 0.8197) <= 5e-3 &&
                  std::abs(y - 0.8197) <= 5e-3 && secs < 1.0;
  std::ostringstream d;
  d << "cp1d(1)=" << c1 << " cp1d(2)=" << c2 << " cp2d(2,2)=(" << x << ","
    << y << ")";
  r.report(1, "critical points", ok, d.str(), secs);
}

void criterion_impulse_weights(Reporter& r) {
  const auto t0 = Clock::now();
  QuadratureSpec spec;
  spec.rel_tol = 1e-9;
  spec.abs_tol = 1e-12;
  const double w1 =
      integrate([](double x) { return gaussian_q(std::sqrt(x)); }, 0.0, 400.0,
                spec);
  QuadratureSpec inner = spec;
  const double w2 = integrate(
      [&](double x) {
        return integrate(
            [&](double y) {
              return gaussian_q(std::sqrt(2.0 * x + 2.0 * y));
            },
            0.0, 100.0, inner);
      },
      0.0, 100.0, spec);
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  const bool ok = std::abs(w1 - 0.5) <= 1e-6 &&
                  std::abs(w2 - 0.1875) <= 1e-5 && secs < 10.0;
  std::ostringstream d;
  d << std::setprecision(10) << "int Q(sqrt(x))=" << w1
    << " int int Q(sqrt(2x+2y))=" << w2;
  r.report(2, "impulse weights", ok, d.str(), secs);
}

void criterion_i0(Reporter& r) {
  const auto t0 = Clock::now();
  bool ok = true;
  std::ostringstream d;
  {
    const double s = db_to_linear(3.0);
    const double e = rel_err(approx_i0(s).value, expect_q_1d(s, 1.0));
    ok = ok && e <= 0.20;
    d << "err(3dB)=" << std::setprecision(3) << e;
  }
  double worst_high = 0.0;
  for (double db = 10.0; db <= 30.0 + 1e-9; db += 2.0) {
    const double s = db_to_linear(db);
    worst_high = std::max(worst_high,
                          rel_err(approx_i0(s).value, expect_q_1d(s, 1.0)));
  }
  ok = ok && worst_high <= 0.05;
  d << " worst(10-30dB)=" << worst_high;
  double worst_low = 0.0;
  for (double db : {-5.0, -7.0, -10.0, -15.0}) {
    const double s = db_to_linear(db);
    worst_low = std::max(worst_low,
                         rel_err(approx_i0(s).value, expect_q_1d(s, 1.0)));
  }
  ok = ok && worst_low <= 0.35;
  d << " worst(<=-5dB)=" << worst_low;
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  r.report(3, "I0 accuracy", ok && secs < 5.0, d.str(), secs);
}

void criterion_i1_i2(Reporter& r) {
  const auto t0 = Clock::now();
  bool ok = true;
  double worst_i1 = 0.0;
  for (double db : {20.0, 25.0, 30.0}) {
    const double s = db_to_linear(db);
    worst_i1 = std::max(
        worst_i1, rel_err(approx_i1(s, 2.0, 2.0).value,
                          expect_q_2d(s, 2.0, 2.0)));
  }
  ok = ok && worst_i1 <= 0.10;
  double worst_i2 = 0.0;
  for (double db : {15.0, 20.0, 25.0, 30.0}) {
    const double s = db_to_linear(db);
    worst_i2 =
        std::max(worst_i2, rel_err(approx_i2(s).value, expect_min_2d(s)));
  }
  ok = ok && worst_i2 <= 0.15;
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  std::ostringstream d;
  d << std::setprecision(3) << "worst I1 err=" << worst_i1
    << " worst I2 err=" << worst_i2;
  r.report(4, "I1 and I2 accuracy", ok && secs < 30.0, d.str(), secs);
}

void criterion_relay(Reporter& r) {
  const auto t0 = Clock::now();
  bool ok = true;
  double worst = 0.0;
  for (double db = 15.0; db <= 30.0 + 1e-9; db += 3.0) {
    const double s = db_to_linear(db);
    worst = std::max(worst, rel_err(approx_relay(s).value, expect_relay_3d(s)));
  }
  ok = ok && worst <= 0.25;

  bool mc_ok = true;
  for (double db : {15.0, 20.0, 25.0, 30.0}) {
    const double s = db_to_linear(db);
    ChannelConfig cfg;
    cfg.mean_snr = s;
    const SimEstimate mc = semi_analytic_relay(cfg, 10'000'000, 20260823);
    const double tol = 3.0 * mc.std_error + 0.25 * mc.mean;
    mc_ok = mc_ok && std::abs(approx_relay(s).value - mc.mean) <= tol;
  }
  ok = ok && mc_ok;

  BerCurve curve;
  curve.scenario = "relay";
  curve.method = "closed_form";
  for (double db = 20.0; db <= 40.0 + 1e-9; db += 5.0) {
    curve.points.push_back({db, approx_relay(db_to_linear(db)).value, {}});
  }
  const AsymptoticFit fit = asymptotic_decomposition(curve);
  ok = ok && std::abs(fit.diversity_order_fit - 2.0) <= 0.1;

  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  std::ostringstream d;
  d << std::setprecision(3) << "worst quad err=" << worst
    << " mc agreement=" << (mc_ok ? "yes" : "no")
    << " diversity fit=" << fit.diversity_order_fit;
  r.report(5, "relay end-to-end", ok && secs < 600.0, d.str(), secs);
}

void criterion_network(Reporter& r) {
  const auto t0 = Clock::now();
  bool ok = true;
  double worst = 0.0;
  for (double db : {15.0, 20.0, 25.0}) {
    const double s = db_to_linear(db);
    ChannelConfig cfg;
    cfg.mean_snr = s;
    const SimEstimate mc = simulate_network_node1(cfg, 10'000'000, 445566);
    worst = std::max(worst, rel_err(approx_network_node1(s).value, mc.mean));
  }
  ok = ok && worst <= 0.30;

  BerCurve curve;
  curve.scenario = "network";
  curve.method = "montecarlo";
  for (double db = 20.0; db <= 30.0 + 1e-9; db += 2.5) {
    ChannelConfig cfg;
    cfg.mean_snr = db_to_linear(db);
    const SimEstimate mc = simulate_network_node1(cfg, 10'000'000, 778899);
    curve.points.push_back({db, mc.mean, mc.std_error});
  }
  const AsymptoticFit fit = asymptotic_decomposition(curve);
  ok = ok && std::abs(fit.diversity_order_fit - 2.0) <= 0.2;

  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  std::ostringstream d;
  d << std::setprecision(3) << "worst sim err=" << worst
    << " simulated diversity fit=" << fit.diversity_order_fit;
  r.report(6, "network-coded", ok && secs < 600.0, d.str(), secs);
}

void criterion_bounds(Reporter& r) {
  const auto t0 = Clock::now();
  std::mt19937_64 gen(12345);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  bool ok = true;
  for (int i = 0; i < 100000 && ok; ++i) {
    const double x = u(gen) * 40.0;
    if (x > 0.0) ok = gaussian_q(std::sqrt(x)) <= chernoff_bound(x);
  }
  for (int i = 0; i < 100000 && ok; ++i) {
    const double x = 1.0 + u(gen) * 39.0;
    ok = gaussian_q(std::sqrt(x)) >= exp_lower_bound(x);
  }
  // Regime inequalities: s >= 2 upper, s <= 1/3 lower. The upper-regime
  // chain Q(sqrt(x)) <= (1/2)e^{-x/2} <= (1/s)e^{-x/s} needs the prefactor
  // crossover x >= ln(s/2)/(1/2 - 1/s); below it the claim is false for
  // s > 2, so sample past it.
  for (int i = 0; i < 100000 && ok; ++i) {
    const double s_hi = 2.0 + u(gen) * 8.0;
    const double s_lo = (1.0 / 3.0) * (0.1 + 0.9 * u(gen));
    const double x_min = std::max(
        1.0, std::log(s_hi / 2.0) / (0.5 - 1.0 / s_hi + 1e-12));
    const double x = x_min + u(gen) * (40.0 - x_min);
    ok = gaussian_q(std::sqrt(x)) <= std::exp(-x / s_hi) / s_hi &&
         gaussian_q(std::sqrt(x)) >= std::exp(-x / s_lo) / s_lo;
  }
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  r.report(7, "bound properties", ok && secs < 5.0,
           ok ? "all inequalities held on 1e5 samples" : "violation found",
           secs);
}

void criterion_oracle_consistency(Reporter& r) {
  const auto t0 = Clock::now();
  QuadratureSpec tight;
  tight.rel_tol = 1e-10;
  tight.abs_tol = 1e-14;
  bool ok = true;
  double worst = 0.0;
  for (double s : {0.1, 0.5, 1.0, 5.0, 20.0}) {
    for (double a : {0.5, 1.0, 2.0, 4.0}) {
      const double exact = 0.5 * (1.0 - std::sqrt(a * s / (a * s + 2.0)));
      worst = std::max(worst, std::abs(expect_q_1d(s, a, tight) - exact));
    }
  }
  ok = ok && worst <= 1e-8;
  double worst_min = 0.0;
  for (double s : {0.5, 2.0, 10.0, 50.0, 200.0}) {
    worst_min = std::max(
        worst_min,
        std::abs(expect_min_2d(s, tight) - expect_q_1d(0.5 * s, 2.0, tight)));
  }
  ok = ok && worst_min <= 1e-8;
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  std::ostringstream d;
  d << std::scientific << std::setprecision(2)
    << "worst 1d deviation=" << worst << " worst min-2d deviation="
    << worst_min;
  r.report(8, "oracle self-consistency", ok, d.str(), secs);
}

void criterion_determinism(Reporter& r) {
  const auto t0 = Clock::now();
  auto with_threads = [](const char* n, auto fn) {
    setenv("QSAMPLING_THREADS", n, 1);
    auto v = fn();
    unsetenv("QSAMPLING_THREADS");
    return v;
  };
  ChannelConfig cfg;
  cfg.mean_snr = 10.0;
  auto sa1 = with_threads("1", [&] {
    return semi_analytic_relay(cfg, 300'000, 99);
  });
  auto sa4 = with_threads("4", [&] {
    return semi_analytic_relay(cfg, 300'000, 99);
  });
  auto sy1 = with_threads("1", [&] {
    return simulate_relay_symbol(cfg, 300'000, 99);
  });
  auto sy3 = with_threads("3", [&] {
    return simulate_relay_symbol(cfg, 300'000, 99);
  });
  auto nw1 = with_threads("1", [&] {
    return simulate_network_node1(cfg, 300'000, 99);
  });
  auto nw2 = with_threads("5", [&] {
    return simulate_network_node1(cfg, 300'000, 99);
  });
  const bool ok = sa1.mean == sa4.mean && sa1.std_error == sa4.std_error &&
                  sy1.mean == sy3.mean && sy1.std_error == sy3.std_error &&
                  nw1.mean == nw2.mean && nw1.std_error == nw2.std_error;
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  r.report(9, "determinism", ok,
           ok ? "bit-identical across worker counts" : "mismatch", secs);
}

}  // namespace

bool run_acceptance(std::ostream& out) {
  Reporter r{out};
  criterion_critical_points(r);
  criterion_impulse_weights(r);
  criterion_i0(r);
  criterion_i1_i2(r);
  criterion_relay(r);
  criterion_network(r);
  criterion_bounds(r);
  criterion_oracle_consistency(r);
  criterion_determinism(r);
  return r.all_passed;
}

}  // namespace qsampling
