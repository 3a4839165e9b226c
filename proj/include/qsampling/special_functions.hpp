#ifndef QSAMPLING_SPECIAL_FUNCTIONS_HPP
#define QSAMPLING_SPECIAL_FUNCTIONS_HPP

namespace qsampling {

/// Upper tail of the standard normal distribution, Q(x) = P(Z > x).
/// Relative accuracy better than 1e-12 for |x| <= 8, graceful underflow
/// for large x. Throws std::domain_error on non-finite input.
double gaussian_q(double x);

/// log(Q(x)), usable far into the tail where Q itself underflows.
double log_gaussian_q(double x);

/// Standard normal density.
double gaussian_pdf(double x);

/// Inverse of gaussian_q on (0, 1). Throws std::domain_error outside.
double gaussian_q_inv(double p);

/// Chernoff upper bound (1/2) exp(-x/2) on Q(sqrt(x)), valid for x >= 0.
double chernoff_bound(double x);

/// Lower bound 3 exp(-3x) on Q(sqrt(x)), claimed only for x > 1.
double exp_lower_bound(double x);

}  // namespace qsampling

#endif
