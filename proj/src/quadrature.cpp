#include "qsampling/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

#include "qsampling/scenario.hpp"
#include "qsampling/special_functions.hpp"

namespace qsampling {

namespace {

// Gauss 7 / Kronrod 15 pair, positive half of the abscissae.
constexpr double kKronrodX[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.0};
constexpr double kKronrodW[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};
constexpr double kGaussW[4] = {0.129484966168870, 0.279705391489277,
                               0.381830050505119, 0.417959183673469};

struct Panel {
  double a, b, value, error;
  bool operator<(const Panel& o) const { return error < o.error; }
};

Panel gk15(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  double kron = kKronrodW[7] * f(c);
  double gauss = kGaussW[3] * f(c);
  for (int i = 0; i < 7; ++i) {
    const double fx = f(c - h * kKronrodX[i]) + f(c + h * kKronrodX[i]);
    kron += kKronrodW[i] * fx;
    if (i % 2 == 1) gauss += kGaussW[i / 2] * fx;
  }
  Panel p;
  p.a = a;
  p.b = b;
  p.value = kron * h;
  p.error = std::abs(kron - gauss) * h;
  return p;
}

// Compensated accumulation of panel values in deterministic (sorted) order.
double sum_panels(std::vector<Panel>& panels) {
  std::sort(panels.begin(), panels.end(),
            [](const Panel& x, const Panel& y) { return x.a < y.a; });
  double s = 0.0, comp = 0.0;
  for (const Panel& p : panels) {
    double y = p.value - comp;
    double t = s + y;
    comp = (t - s) - y;
    s = t;
  }
  return s;
}

// Gauss-Legendre nodes and weights on [-1, 1], Newton iteration on P_n.
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
  x.assign(n, 0.0);
  w.assign(n, 0.0);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (z * p0 - p1) / (z * z - 1.0);
      double dz = p0 / pp;
      z -= dz;
      if (std::abs(dz) < 1e-15) break;
    }
    x[i] = -z;
    x[n - 1 - i] = z;
    w[i] = w[n - 1 - i] = 2.0 / ((1.0 - z * z) * pp * pp);
  }
}

}  // namespace

// Global-adaptive GK15 over a pre-split set of panel edges. Seeding with
// graded edges keeps a sharply concentrated integrand visible to the error
// estimator when the overall interval is much wider than the feature.
static double integrate_edges(const std::function<double(double)>& f,
                       const std::vector<double>& edges,
                       const QuadratureSpec& spec) {
  std::priority_queue<Panel> queue;
  double total = 0.0;
  double total_err = 0.0;
  for (size_t e = 0; e + 1 < edges.size(); ++e) {
    Panel p = gk15(f, edges[e], edges[e + 1]);
    total += p.value;
    total_err += p.error;
    queue.push(p);
  }
  int splits = 0;
  while (total_err > std::max(spec.abs_tol, spec.rel_tol * std::abs(total))) {
    if (splits++ >= spec.max_subdivisions) {
      throw ConvergenceError("integrate: subdivision budget exhausted", total);
    }
    Panel worst = queue.top();
    queue.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    Panel left = gk15(f, worst.a, mid);
    Panel right = gk15(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    queue.push(left);
    queue.push(right);
  }
  // Re-sum accepted panels in spatial order for a scheduling-independent result.
  std::vector<Panel> panels;
  panels.reserve(queue.size());
  while (!queue.empty()) {
    panels.push_back(queue.top());
    queue.pop();
  }
  return sum_panels(panels);
}

namespace {

// Geometrically graded edges from a feature scale up to the truncation point.
std::vector<double> graded_edges(double scale, double upper) {
  std::vector<double> edges = {0.0};
  for (double x = scale / 16.0; x < upper; x *= 2.0) edges.push_back(x);
  edges.push_back(upper);
  return edges;
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureSpec& spec) {
  return integrate_edges(f, {a, b}, spec);
}

double expect_q_1d(double mean_snr, double scale_a, const QuadratureSpec& spec) {
  const double s = mean_snr;
  const double upper = spec.truncation_multiplier * s;
  auto f = [s, scale_a](double x) {
    return gaussian_q(std::sqrt(scale_a * x)) * std::exp(-x / s) / s;
  };
  return integrate_edges(f, graded_edges(std::min(3.0 / scale_a, s), upper),
                         spec);
}

double expect_q_2d(double mean_snr, double a1, double a2,
                   const QuadratureSpec& spec) {
  const double s = mean_snr;
  const double upper = spec.truncation_multiplier * s;
  QuadratureSpec inner = spec;
  inner.rel_tol = spec.rel_tol * 0.1;
  inner.abs_tol = spec.abs_tol * 0.1;
  const std::vector<double> inner_edges =
      graded_edges(std::min(3.0 / a2, s), upper);
  auto outer = [&](double x) {
    auto f = [&](double y) {
      return gaussian_q(std::sqrt(a1 * x + a2 * y)) * std::exp(-y / s) / s;
    };
    return integrate_edges(f, inner_edges, inner) * std::exp(-x / s) / s;
  };
  return integrate_edges(outer, graded_edges(std::min(3.0 / a1, s), upper),
                         spec);
}

double expect_min_2d(double mean_snr, const QuadratureSpec& spec) {
  const double s = mean_snr;
  const double upper = spec.truncation_multiplier * s;
  QuadratureSpec inner = spec;
  inner.rel_tol = spec.rel_tol * 0.1;
  inner.abs_tol = spec.abs_tol * 0.1;
  auto outer = [&](double x) {
    auto f = [&](double y) {
      return gaussian_q(std::sqrt(2.0 * std::min(x, y))) * std::exp(-y / s) / s;
    };
    // Split the inner integral at the kink y = x.
    double in = integrate_edges(
        f, graded_edges(std::min(1.5, s), std::min(x, upper)), inner);
    if (x < upper) in += integrate(f, x, upper, inner);
    return in * std::exp(-x / s) / s;
  };
  return integrate_edges(outer, graded_edges(std::min(1.5, s), upper), spec);
}

namespace {

// One tensorized evaluation of the relay expectation with m-point panels.
// Substituting gamma = s v^2 removes the sqrt singularity at the origin;
// panel edges are graded to resolve the 1/sqrt(s) scale there.
double relay_3d_once(double s, double v_max, int m) {
  const double c = 1.0 / std::sqrt(std::max(s, 1.0));
  std::vector<double> edges = {0.0,
                               std::min(0.05, 5.0 * c),
                               std::min(0.3, 30.0 * c),
                               1.0,
                               2.5,
                               v_max};
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  std::vector<double> gx, gw;
  gauss_legendre(m, gx, gw);
  std::vector<double> v, w;
  for (size_t e = 0; e + 1 < edges.size(); ++e) {
    const double half = 0.5 * (edges[e + 1] - edges[e]);
    const double mid = 0.5 * (edges[e + 1] + edges[e]);
    for (int i = 0; i < m; ++i) {
      const double vi = mid + half * gx[i];
      v.push_back(vi);
      // axis weight: 2 v exp(-v^2) dv from the exponential pdf
      w.push_back(half * gw[i] * 2.0 * vi * std::exp(-vi * vi));
    }
  }

  const size_t n = v.size();
  std::vector<double> gamma(n);
  for (size_t i = 0; i < n; ++i) gamma[i] = s * v[i] * v[i];

  double sum = 0.0, comp = 0.0;
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      const double wij = w[i] * w[j];
      double row = 0.0;
      for (size_t k = 0; k < n; ++k) {
        row += w[k] * instantaneous_ber_relay(
                          {gamma[i], gamma[j], gamma[k]});
      }
      const double y = wij * row - comp;
      const double t = sum + y;
      comp = (t - sum) - y;
      sum = t;
    }
  }
  return sum;
}

}  // namespace

double expect_relay_3d(double mean_snr, const QuadratureSpec& spec) {
  const double v_max = std::sqrt(spec.truncation_multiplier);
  const double rel = std::max(spec.rel_tol, 1e-6);
  double prev = relay_3d_once(mean_snr, v_max, 16);
  for (int m : {32, 64, 128}) {
    const double cur = relay_3d_once(mean_snr, v_max, m);
    if (std::abs(cur - prev) <=
        std::max(spec.abs_tol, rel * std::abs(cur))) {
      return cur;
    }
    prev = cur;
  }
  throw ConvergenceError("expect_relay_3d: dyadic refinement did not settle",
                         prev);
}

}  // namespace qsampling
