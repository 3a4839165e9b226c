#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "qsampling/closed_form.hpp"
#include "qsampling/quadrature.hpp"
#include "qsampling/simulate.hpp"

using namespace qsampling;

namespace {
double combined_3sigma(const SimEstimate& a, const SimEstimate& b) {
  return 3.0 * std::sqrt(a.std_error * a.std_error +
                         b.std_error * b.std_error);
}
}  // namespace

TEST_CASE("fixed-seed repeatability") {
  ChannelConfig cfg;
  cfg.mean_snr = 10.0;
  const SimEstimate a = simulate_relay_symbol(cfg, 200000, 42);
  const SimEstimate b = simulate_relay_symbol(cfg, 200000, 42);
  CHECK(a.mean == b.mean);
  CHECK(a.std_error == b.std_error);
  const SimEstimate c = semi_analytic_relay(cfg, 200000, 42);
  const SimEstimate d = semi_analytic_relay(cfg, 200000, 42);
  CHECK(c.mean == d.mean);
  // a different seed gives a different draw
  CHECK(semi_analytic_relay(cfg, 200000, 43).mean != c.mean);
  CHECK_THROWS_AS(semi_analytic_relay(cfg, 0, 1), std::domain_error);
}

TEST_CASE("std_error scales as 1/sqrt(trials)") {
  const SimEstimate small = semi_analytic_i0(10.0, 1.0, 250000, 7);
  const SimEstimate large = semi_analytic_i0(10.0, 1.0, 1000000, 7);
  const double ratio = small.std_error / large.std_error;
  CHECK(ratio > 1.6);
  CHECK(ratio < 2.4);
}

TEST_CASE("semi_analytic_i0 agrees with the analytic identity") {
  const SimEstimate est = semi_analytic_i0(10.0, 1.0, 1000000, 11);
  CHECK(std::abs(est.mean - 0.04356453541236156) <= 3.0 * est.std_error);
}

TEST_CASE("semi_analytic_i1 agrees with the 2D quadrature oracle") {
  const SimEstimate est = semi_analytic_i1(100.0, 2.0, 2.0, 2000000, 12);
  CHECK(std::abs(est.mean - expect_q_2d(100.0, 2.0, 2.0)) <=
        3.0 * est.std_error);
}

TEST_CASE("semi_analytic_i2 matches the min-of-exponentials reduction") {
  const SimEstimate direct = semi_analytic_i2(20.0, 1000000, 13);
  const SimEstimate reduced = semi_analytic_i0(10.0, 2.0, 1000000, 14);
  CHECK(std::abs(direct.mean - reduced.mean) <=
        combined_3sigma(direct, reduced));
}

TEST_CASE("symbol-level and semi-analytic relay estimates agree") {
  ChannelConfig cfg;
  cfg.mean_snr = 10.0;
  const SimEstimate sym = simulate_relay_symbol(cfg, 2000000, 15);
  const SimEstimate semi = semi_analytic_relay(cfg, 2000000, 16);
  CHECK(std::abs(sym.mean - semi.mean) <= combined_3sigma(sym, semi));
  CHECK_FALSE(sym.low_confidence);
  // the semi-analytic estimator has far lower variance at equal trials
  CHECK(semi.std_error < 0.5 * sym.std_error);
}

TEST_CASE("semi_analytic_relay agrees with the quadrature oracle") {
  ChannelConfig cfg;
  cfg.mean_snr = 10.0;
  const SimEstimate est = semi_analytic_relay(cfg, 2000000, 17);
  CHECK(std::abs(est.mean - expect_relay_3d(10.0)) <= 3.0 * est.std_error);
}

TEST_CASE("very high SNR: no error events, flagged low-confidence") {
  ChannelConfig cfg;
  cfg.mean_snr = 1e6;  // 60 dB
  const SimEstimate est = simulate_relay_symbol(cfg, 100000, 18);
  CHECK(est.mean == 0.0);
  CHECK(est.low_confidence);
}

TEST_CASE("simulate_network_node1 tracks the closed form") {
  ChannelConfig cfg;
  cfg.mean_snr = 100.0;
  const SimEstimate est = simulate_network_node1(cfg, 2000000, 19);
  const double cf = approx_network_node1(100.0).value;
  CHECK(std::abs(cf - est.mean) / est.mean < 0.30);
  const SimEstimate again = simulate_network_node1(cfg, 2000000, 19);
  CHECK(est.mean == again.mean);
}
