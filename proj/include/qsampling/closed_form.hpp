#ifndef QSAMPLING_CLOSED_FORM_HPP
#define QSAMPLING_CLOSED_FORM_HPP

#include <optional>
#include <string>
#include <vector>

namespace qsampling {

/// One asymptotic term amplitude/s^d * exp(-exponent_sum/s).
struct GainTerm {
  double amplitude;
  double exponent_sum;
};

/// A closed-form average-BER approximation together with its
/// diversity/coding-gain decomposition. `terms` is empty for the direct
/// low-SNR branch of approx_i0, where the value is Q(sqrt(s)).
struct ClosedFormBer {
  double value = 0.0;
  int diversity_order = 1;
  double mean_snr = 0.0;
  std::vector<GainTerm> terms;

  /// Re-evaluates the stored term sum at the stored mean SNR.
  double evaluate_terms() const;
};

/// Piecewise approximation of E[Q(sqrt(X))], X exponential of mean s.
ClosedFormBer approx_i0(double mean_snr, double midband_boundary = 1.0);

/// 2D impulse approximation of E[Q(sqrt(a1 X + a2 Y))].
ClosedFormBer approx_i1(double mean_snr, double a1, double a2);

/// Union-bound impulse approximation of E[Q(sqrt(2 min(X, Y)))].
ClosedFormBer approx_i2(double mean_snr);

/// Three-term approximation of the relay end-to-end average BER.
ClosedFormBer approx_relay(double mean_snr);

/// Three-term approximation of node 1's average BER in the
/// network-coded system.
ClosedFormBer approx_network_node1(double mean_snr);

struct CurvePoint {
  double snr_db;
  double ber;
  std::optional<double> std_error;
};

struct BerCurve {
  std::string scenario;
  std::string method;
  std::vector<CurvePoint> points;
};

struct AsymptoticFit {
  double diversity_order_fit;
  double coding_gain_db;
};

/// Least-squares fit of log10(BER) against SNR(dB) on the tail
/// (points with snr_db >= 20); reports d = -10 * slope and the coding
/// gain implied by the intercept. Throws std::invalid_argument with
/// fewer than 4 tail points.
AsymptoticFit asymptotic_decomposition(const BerCurve& curve);

/// Comparison of one stored closed-form constant against a value
/// re-derived from the corresponding 2D asymptotic construction.
struct RederivedTerm {
  std::string name;
  double stored_amplitude;
  double derived_amplitude;
  double stored_exponent;
  double derived_exponent;
};

/// Re-solves the 2D critical-point problems behind the relay/network
/// constants and reports the drift against the stored literals.
std::vector<RederivedTerm> rederive_relay_constants();

}  // namespace qsampling

#endif
