#include "qsampling/sampling.hpp"

#include <cmath>
#include <stdexcept>

#include "qsampling/special_functions.hpp"

namespace qsampling {

namespace {

// Safeguarded Newton with bisection fallback; f must change sign on [lo, hi].
template <typename F, typename Fd>
double newton_bisect(F f, Fd fd, double lo, double hi, double tol) {
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if (flo * fhi > 0.0) {
    throw std::logic_error("newton_bisect: root not bracketed");
  }
  double x = 0.5 * (lo + hi);
  for (int it = 0; it < 200; ++it) {
    double fx = f(x);
    if (fx == 0.0) return x;
    if ((fx < 0.0) == (flo < 0.0)) {
      lo = x;
      flo = fx;
    } else {
      hi = x;
    }
    double dfx = fd(x);
    double step = fx / dfx;
    double xn = x - step;
    if (!(xn > lo && xn < hi)) {
      xn = 0.5 * (lo + hi);  // Newton left the bracket
      step = x - xn;
    }
    x = xn;
    if (std::abs(step) < tol || hi - lo < tol) return x;
  }
  return x;
}

// Root z of z phi(z) - k Q(z) = 0 for k > 0; z = sqrt(a x) at the
// stationary point of the asymptotic sampler.
double stationarity_root(double k) {
  auto f = [k](double z) { return z * gaussian_pdf(z) - k * gaussian_q(z); };
  // f'(z) = phi(z)(1 - z^2) + k phi(z)
  auto fd = [k](double z) { return gaussian_pdf(z) * (1.0 + k - z * z); };
  return newton_bisect(f, fd, 1e-12, 10.0, 1e-13);
}

}  // namespace

IntegrandValues finite_n_integrand_1d(const IntegrandFactors& factors, double t) {
  if (!(t > 0.0) || !(factors.scale_a > 0.0) || !(factors.mean_snr > 0.0) ||
      factors.order_n < 1) {
    throw std::domain_error("finite_n_integrand_1d: invalid arguments");
  }
  const double n = static_cast<double>(factors.order_n);
  const double s = factors.mean_snr;
  const double log_t = std::log(t);
  const double log_xn = n * log_t;  // log(t^N)

  // log of the Jacobian factor c(t) = N t^(N-1)
  const double log_c = std::log(n) + (n - 1.0) * log_t;

  double log_q;  // log Q(sqrt(a t^N))
  double log_f;  // log (1/s) exp(-t^N/s)
  if (log_xn > 709.0) {
    // t^N overflows: Q and the exponential pdf both vanish.
    log_q = -std::numeric_limits<double>::infinity();
    log_f = -std::numeric_limits<double>::infinity();
  } else {
    const double xn = std::exp(log_xn);
    log_q = log_gaussian_q(std::sqrt(factors.scale_a * xn));
    log_f = -xn / s - std::log(s);
  }

  IntegrandValues out;
  out.h_value = std::exp(log_q + log_c);
  out.g_value = std::exp(log_f + log_c);
  out.full_value = std::exp(log_q + log_c + log_f);
  return out;
}

double critical_point_1d(double scale_a) {
  if (!(scale_a > 0.0)) {
    throw std::domain_error("critical_point_1d: scale must be positive");
  }
  const double z = stationarity_root(2.0);
  return z * z / scale_a;
}

std::pair<double, double> critical_point_2d(double a1, double a2) {
  if (!(a1 > 0.0) || !(a2 > 0.0)) {
    throw std::domain_error("critical_point_2d: scales must be positive");
  }
  // Stationarity of ln Q(sqrt(v)) + ln x + ln y with v = a1 x + a2 y
  // gives a1 x = a2 y = v/2 and sqrt(v) phi(sqrt(v)) = 4 Q(sqrt(v)).
  const double z = stationarity_root(4.0);
  const double v = z * z;
  return {v / (2.0 * a1), v / (2.0 * a2)};
}

double impulse_weight_1d(double scale_a) {
  if (!(scale_a > 0.0)) {
    throw std::domain_error("impulse_weight_1d: scale must be positive");
  }
  return 0.5 / scale_a;
}

double impulse_weight_2d(double a1, double a2) {
  if (!(a1 > 0.0) || !(a2 > 0.0)) {
    throw std::domain_error("impulse_weight_2d: scales must be positive");
  }
  return 0.75 / (a1 * a2);
}

double pdf_sampler_location(double mean_snr, int order_n) {
  if (!(mean_snr > 0.0) || order_n < 1) {
    throw std::domain_error("pdf_sampler_location: invalid arguments");
  }
  if (order_n == infinite_order) return mean_snr;
  const double n = static_cast<double>(order_n);
  return (n - 1.0) / n * mean_snr;
}

Regime regime_select(double mean_snr, double midband_boundary) {
  if (!(mean_snr > 0.0)) {
    throw std::domain_error("regime_select: mean SNR must be positive");
  }
  Regime r;
  r.kind = mean_snr >= midband_boundary ? SamplerKind::q_sampler
                                        : SamplerKind::pdf_sampler;
  return r;
}

}  // namespace qsampling
