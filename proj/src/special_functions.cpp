#include "qsampling/special_functions.hpp"

#include <cmath>
#include <stdexcept>

namespace qsampling {

namespace {
constexpr double kSqrt2 = 1.4142135623730951;
constexpr double kInvSqrt2Pi = 0.3989422804014327;
constexpr double kLnSqrt2Pi = 0.9189385332046727;
}  // namespace

double gaussian_q(double x) {
  if (!std::isfinite(x)) {
    throw std::domain_error("gaussian_q: non-finite argument");
  }
  return 0.5 * std::erfc(x / kSqrt2);
}

double gaussian_pdf(double x) { return kInvSqrt2Pi * std::exp(-0.5 * x * x); }

double log_gaussian_q(double x) {
  if (!std::isfinite(x)) {
    throw std::domain_error("log_gaussian_q: non-finite argument");
  }
  if (x < 36.0) {
    return std::log(0.5 * std::erfc(x / kSqrt2));
  }
  // Asymptotic series Q(x) ~ phi(x)/x (1 - 1/x^2 + 3/x^4 - 15/x^6)
  const double ix2 = 1.0 / (x * x);
  return -0.5 * x * x - std::log(x) - kLnSqrt2Pi +
         std::log1p(-ix2 * (1.0 - 3.0 * ix2 * (1.0 - 5.0 * ix2)));
}

double gaussian_q_inv(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw std::domain_error("gaussian_q_inv: argument outside (0, 1)");
  }
  // Acklam's rational approximation for the standard normal quantile,
  // then Newton polishing on gaussian_q. Q^{-1}(p) = -Phi^{-1}(p).
  static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                             -2.759285104469687e+02, 1.383577518672690e+02,
                             -3.066479806614716e+01, 2.506628277459239e+00};
  static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                             -1.556989798598866e+02, 6.680131188771972e+01,
                             -1.328068155288572e+01};
  static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                             -2.400758277161838e+00, -2.549732539343734e+00,
                             4.374664141464968e+00,  2.938163982698783e+00};
  static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                             2.445134137142996e+00, 3.754408661907416e+00};
  // Work on p itself (never on 1 - p, which rounds to 1 for tiny p):
  // z = Phi^{-1}(p), then Q^{-1}(p) = -z.
  const double plow = 0.02425;
  double z;
  if (p < plow) {
    double r = std::sqrt(-2.0 * std::log(p));
    z = (((((c[0] * r + c[1]) * r + c[2]) * r + c[3]) * r + c[4]) * r + c[5]) /
        ((((d[0] * r + d[1]) * r + d[2]) * r + d[3]) * r + 1.0);
  } else if (p > 1.0 - plow) {
    double r = std::sqrt(-2.0 * std::log(1.0 - p));
    z = -(((((c[0] * r + c[1]) * r + c[2]) * r + c[3]) * r + c[4]) * r + c[5]) /
        ((((d[0] * r + d[1]) * r + d[2]) * r + d[3]) * r + 1.0);
  } else {
    double r = p - 0.5;
    double t = r * r;
    z = (((((a[0] * t + a[1]) * t + a[2]) * t + a[3]) * t + a[4]) * t + a[5]) *
        r /
        (((((b[0] * t + b[1]) * t + b[2]) * t + b[3]) * t + b[4]) * t + 1.0);
  }
  double x = -z;
  // x now approximates Q^{-1}(p); two Newton steps reach ~1e-15.
  // In the far tail work with logs to keep the correction well scaled.
  for (int it = 0; it < 3; ++it) {
    double logq = log_gaussian_q(x);
    double logphi = -0.5 * x * x - kLnSqrt2Pi;
    // f = Q(x) - p; step = f / phi = (exp(logq) - p) / phi
    double step = (std::exp(logq) - p) * std::exp(-logphi);
    if (!std::isfinite(step)) break;
    x += step;
    if (std::abs(step) < 1e-14 * (1.0 + std::abs(x))) break;
  }
  return x;
}

double chernoff_bound(double x) {
  if (!(x >= 0.0)) {
    throw std::domain_error("chernoff_bound: negative argument");
  }
  return 0.5 * std::exp(-0.5 * x);
}

double exp_lower_bound(double x) {
  if (!(x > 1.0)) {
    throw std::domain_error("exp_lower_bound: bound only valid for x > 1");
  }
  return 3.0 * std::exp(-3.0 * x);
}

}  // namespace qsampling
