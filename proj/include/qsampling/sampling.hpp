#ifndef QSAMPLING_SAMPLING_HPP
#define QSAMPLING_SAMPLING_HPP

#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

namespace qsampling {

/// Parameters of the transformed integrand: Q(sqrt(a x)) against an
/// exponential pdf of mean s, after the change of variables x -> t^N.
struct IntegrandFactors {
  double scale_a = 1.0;
  double mean_snr = 1.0;
  int order_n = 1;
};

/// One Dirac-impulse approximation: per-dimension location in the
/// original x coordinates (t_*^N) plus the impulse mass.
struct ImpulseApprox {
  std::vector<double> locations;
  double weight = 0.0;
  int dimension = 1;
};

enum class SamplerKind { q_sampler, pdf_sampler };

struct Regime {
  SamplerKind kind = SamplerKind::q_sampler;
  double threshold_high = 2.0;
  double threshold_low = 1.0 / 3.0;
};

struct IntegrandValues {
  double h_value;     // Q(sqrt(a t^N)) N t^(N-1)
  double g_value;     // (1/s) exp(-t^N/s) N t^(N-1)
  double full_value;  // h * (1/s) exp(-t^N/s)
};

/// Evaluates the constituent functions of the transformed integrand at t.
/// Large t^N is handled in log space; under/overflow saturates to 0.
IntegrandValues finite_n_integrand_1d(const IntegrandFactors& factors, double t);

/// Asymptotic maximizer (in x = t^N coordinates) of the Q-based sampler
/// for Q(sqrt(a x)): the root of sqrt(ax) phi(sqrt(ax)) = 2 Q(sqrt(ax)).
double critical_point_1d(double scale_a);

/// Asymptotic maximizer of the 2D sampler for Q(sqrt(a1 x + a2 y)).
std::pair<double, double> critical_point_2d(double a1, double a2);

/// Impulse mass for the 1D Q-sampler: integral of Q(sqrt(a x)) = 1/(2a).
double impulse_weight_1d(double scale_a);

/// Impulse mass for the 2D Q-sampler: 3/(4 a1 a2).
double impulse_weight_2d(double a1, double a2);

/// Sentinel for the asymptotic (N -> infinity) order.
inline constexpr int infinite_order = std::numeric_limits<int>::max();

/// Critical point of the pdf-based sampler: ((N-1)/N) s, or s at the
/// infinite_order sentinel.
double pdf_sampler_location(double mean_snr, int order_n);

/// Picks the sampling function for a given mean SNR. The choice is pinned
/// only for s >= 2 (Q-sampler) and s <= 1/3 (pdf-sampler); the midband
/// boundary defaults to s = 1 and is configurable.
Regime regime_select(double mean_snr, double midband_boundary = 1.0);

}  // namespace qsampling

#endif
