#include "qsampling/closed_form.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include "qsampling/quadrature.hpp"
#include "qsampling/sampling.hpp"
#include "qsampling/special_functions.hpp"

namespace qsampling {

namespace {

// Exponent constants reported for the relay and network-coded systems.
// The first arises from the direct term of P1, the last from the sum of
// the two P2 critical coordinates (1.7564 + 1.3737). See
// rederive_relay_constants for a numerical cross-check.
constexpr double kExpDirect = 1.3049;
constexpr double kExpCross = 3.1301;

double term_sum(double s, int d, const std::vector<GainTerm>& terms) {
  double v = 0.0;
  const double sd = std::pow(s, d);
  for (const GainTerm& t : terms) {
    v += t.amplitude / sd * std::exp(-t.exponent_sum / s);
  }
  return v;
}

ClosedFormBer make(double s, int d, std::vector<GainTerm> terms) {
  ClosedFormBer out;
  out.mean_snr = s;
  out.diversity_order = d;
  out.terms = std::move(terms);
  out.value = term_sum(s, d, out.terms);
  return out;
}

}  // namespace

double ClosedFormBer::evaluate_terms() const {
  return term_sum(mean_snr, diversity_order, terms);
}

ClosedFormBer approx_i0(double mean_snr, double midband_boundary) {
  if (!(mean_snr > 0.0)) {
    throw std::domain_error("approx_i0: mean SNR must be positive");
  }
  const Regime regime = regime_select(mean_snr, midband_boundary);
  if (regime.kind == SamplerKind::pdf_sampler) {
    ClosedFormBer out;
    out.mean_snr = mean_snr;
    out.diversity_order = 1;
    out.value = gaussian_q(std::sqrt(mean_snr));
    return out;
  }
  return make(mean_snr, 1,
              {{impulse_weight_1d(1.0), critical_point_1d(1.0)}});
}

ClosedFormBer approx_i1(double mean_snr, double a1, double a2) {
  if (!(mean_snr > 0.0) || !(a1 > 0.0) || !(a2 > 0.0)) {
    throw std::domain_error("approx_i1: arguments must be positive");
  }
  const auto [x_star, y_star] = critical_point_2d(a1, a2);
  return make(mean_snr, 2, {{impulse_weight_2d(a1, a2), x_star + y_star}});
}

ClosedFormBer approx_i2(double mean_snr) {
  if (!(mean_snr > 0.0)) {
    throw std::domain_error("approx_i2: mean SNR must be positive");
  }
  // Union bound Q(sqrt(2 min)) <= Q(sqrt(2x)) + Q(sqrt(2y)): two identical
  // 1D-sampled terms.
  const double x_star = critical_point_1d(2.0);
  const double w = impulse_weight_1d(2.0);
  return make(mean_snr, 1, {{w, x_star}, {w, x_star}});
}

ClosedFormBer approx_relay(double mean_snr) {
  if (!(mean_snr > 0.0)) {
    throw std::domain_error("approx_relay: mean SNR must be positive");
  }
  const auto [x_star, y_star] = critical_point_2d(2.0, 2.0);
  return make(mean_snr, 2,
              {{1.0 / 16.0, kExpDirect},
               {3.0 / 16.0, x_star + y_star},
               {1.0 / 4.0, kExpCross}});
}

ClosedFormBer approx_network_node1(double mean_snr) {
  if (!(mean_snr > 0.0)) {
    throw std::domain_error("approx_network_node1: mean SNR must be positive");
  }
  const auto [x_star, y_star] = critical_point_2d(2.0, 2.0);
  return make(mean_snr, 2,
              {{1.0 / 16.0, kExpDirect},
               {3.0 / 8.0, x_star + y_star},
               {4.0 / 16.0, kExpCross}});
}

AsymptoticFit asymptotic_decomposition(const BerCurve& curve) {
  std::vector<CurvePoint> tail;
  for (const CurvePoint& p : curve.points) {
    if (p.snr_db >= 20.0 && p.ber > 0.0) tail.push_back(p);
  }
  if (tail.size() < 4) {
    throw std::invalid_argument(
        "asymptotic_decomposition: need at least 4 points with SNR >= 20 dB");
  }
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  const double n = static_cast<double>(tail.size());
  for (const CurvePoint& p : tail) {
    const double y = std::log10(p.ber);
    sx += p.snr_db;
    sy += y;
    sxx += p.snr_db * p.snr_db;
    sxy += p.snr_db * y;
  }
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  const double intercept = (sy - slope * sx) / n;
  AsymptoticFit fit;
  fit.diversity_order_fit = -10.0 * slope;
  fit.coding_gain_db = std::abs(fit.diversity_order_fit) > 1e-9
                           ? -10.0 * intercept / fit.diversity_order_fit
                           : 0.0;
  return fit;
}

namespace {

// Maximizes obj over the positive quadrant with Nelder-Mead.
std::array<double, 2> maximize_2d(
    const std::function<double(double, double)>& obj,
    std::array<double, 2> start) {
  auto f = [&](const std::array<double, 2>& p) {
    if (p[0] <= 0.0 || p[1] <= 0.0) return -1e300;
    return obj(p[0], p[1]);
  };
  std::array<std::array<double, 2>, 3> simplex = {
      start, {start[0] * 1.2, start[1]}, {start[0], start[1] * 1.2}};
  std::array<double, 3> fv;
  for (int i = 0; i < 3; ++i) fv[i] = f(simplex[i]);
  for (int it = 0; it < 500; ++it) {
    // order: best 0, worst 2
    std::array<int, 3> idx = {0, 1, 2};
    std::sort(idx.begin(), idx.end(),
              [&](int a, int b) { return fv[a] > fv[b]; });
    std::array<std::array<double, 2>, 3> sp;
    std::array<double, 3> sf;
    for (int i = 0; i < 3; ++i) {
      sp[i] = simplex[idx[i]];
      sf[i] = fv[idx[i]];
    }
    simplex = sp;
    fv = sf;
    const double spread = std::abs(fv[0] - fv[2]);
    const double size = std::abs(simplex[0][0] - simplex[2][0]) +
                        std::abs(simplex[0][1] - simplex[2][1]);
    if (spread < 1e-14 && size < 1e-9) break;
    std::array<double, 2> centroid = {
        0.5 * (simplex[0][0] + simplex[1][0]),
        0.5 * (simplex[0][1] + simplex[1][1])};
    auto blend = [&](double alpha) -> std::array<double, 2> {
      return {centroid[0] + alpha * (simplex[2][0] - centroid[0]),
              centroid[1] + alpha * (simplex[2][1] - centroid[1])};
    };
    std::array<double, 2> refl = blend(-1.0);
    double fr = f(refl);
    if (fr > fv[0]) {
      std::array<double, 2> exp_pt = blend(-2.0);
      double fe = f(exp_pt);
      if (fe > fr) {
        simplex[2] = exp_pt;
        fv[2] = fe;
      } else {
        simplex[2] = refl;
        fv[2] = fr;
      }
    } else if (fr > fv[1]) {
      simplex[2] = refl;
      fv[2] = fr;
    } else {
      std::array<double, 2> con = blend(0.5);
      double fc = f(con);
      if (fc > fv[2]) {
        simplex[2] = con;
        fv[2] = fc;
      } else {
        for (int i = 1; i < 3; ++i) {
          simplex[i] = {0.5 * (simplex[i][0] + simplex[0][0]),
                        0.5 * (simplex[i][1] + simplex[0][1])};
          fv[i] = f(simplex[i]);
        }
      }
    }
  }
  return fv[0] > fv[1] ? simplex[0] : simplex[1];
}

double quad_2d(const std::function<double(double, double)>& p, double upper) {
  QuadratureSpec spec;
  spec.rel_tol = 1e-7;
  spec.abs_tol = 1e-10;
  QuadratureSpec inner = spec;
  inner.rel_tol = 1e-8;
  inner.abs_tol = 1e-11;
  auto outer = [&](double x) {
    return integrate([&](double y) { return p(x, y); }, 0.0, upper, inner);
  };
  return integrate(outer, 0.0, upper, spec);
}

}  // namespace

std::vector<RederivedTerm> rederive_relay_constants() {
  const double sqrt2 = std::sqrt(2.0);
  // Asymptotic limits of the two halves of the conditional relay BER:
  // P1 with gamma_RD -> infinity, and P2 with gamma_RD -> infinity.
  auto p1_direct = [&](double x, double y) {
    // x = gamma_SR, y = gamma_SD
    return (1.0 - gaussian_q(std::sqrt(2.0 * x))) *
           gaussian_q(sqrt2 * (x + y) / std::sqrt(y));
  };
  auto p1_mrc = [&](double x, double y) {
    return gaussian_q(std::sqrt(2.0 * (x + y)));
  };
  auto p2 = [&](double x, double y) {
    return gaussian_q(std::sqrt(2.0 * x)) *
           gaussian_q(sqrt2 * (y - x) / std::sqrt(y));
  };

  auto location_sum = [&](const std::function<double(double, double)>& p,
                          std::array<double, 2> start) {
    auto obj = [&](double x, double y) {
      const double v = p(x, y);
      if (!(v > 0.0)) return -1e300;
      return std::log(v) + std::log(x) + std::log(y);
    };
    const auto loc = maximize_2d(obj, start);
    return loc[0] + loc[1];
  };

  const auto [cx, cy] = critical_point_2d(2.0, 2.0);
  std::vector<RederivedTerm> out;
  out.push_back({"relay_p1_direct", 1.0 / 16.0, quad_2d(p1_direct, 80.0),
                 kExpDirect, location_sum(p1_direct, {0.4, 0.9})});
  out.push_back({"relay_p1_mrc", 3.0 / 16.0, quad_2d(p1_mrc, 80.0),
                 cx + cy, location_sum(p1_mrc, {0.8, 0.8})});
  out.push_back({"relay_p2", 1.0 / 4.0, quad_2d(p2, 80.0), kExpCross,
                 location_sum(p2, {1.7, 1.4})});
  return out;
}

}  // namespace qsampling
