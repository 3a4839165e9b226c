#ifndef QSAMPLING_QUADRATURE_HPP
#define QSAMPLING_QUADRATURE_HPP

#include <functional>
#include <stdexcept>

namespace qsampling {

struct QuadratureSpec {
  double rel_tol = 1e-8;
  double abs_tol = 1e-12;
  int max_subdivisions = 4000;
  double truncation_multiplier = 40.0;  // integrate each axis over [0, mult*mean]
};

/// Thrown when the subdivision budget runs out; carries the best estimate.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double estimate)
      : std::runtime_error(what), best_estimate_(estimate) {}
  double best_estimate() const { return best_estimate_; }

 private:
  double best_estimate_;
};

/// Adaptive Gauss-Kronrod (G7, K15) integration of f over [a, b].
double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureSpec& spec = {});

/// E[Q(sqrt(a X))] with X exponential of mean s.
double expect_q_1d(double mean_snr, double scale_a,
                   const QuadratureSpec& spec = {});

/// E[Q(sqrt(a1 X + a2 Y))] with X, Y i.i.d. exponential of mean s.
double expect_q_2d(double mean_snr, double a1, double a2,
                   const QuadratureSpec& spec = {});

/// E[Q(sqrt(2 min(X, Y)))] with X, Y i.i.d. exponential of mean s.
double expect_min_2d(double mean_snr, const QuadratureSpec& spec = {});

/// Expectation of the C-MRC relay BER over i.i.d. exponential link SNRs
/// of mean s. Tensorized graded Gauss-Legendre in sqrt coordinates with a
/// dyadic refinement check.
double expect_relay_3d(double mean_snr, const QuadratureSpec& spec = {});

}  // namespace qsampling

#endif
