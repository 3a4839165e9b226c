#ifndef QSAMPLING_SCENARIO_HPP
#define QSAMPLING_SCENARIO_HPP

namespace qsampling {

/// Instantaneous link SNRs of the canonical relay network, linear scale.
struct LinkSnrs {
  double gamma_sr = 0.0;
  double gamma_rd = 0.0;
  double gamma_sd = 0.0;
};

/// Instantaneous state of the network-coded system as seen by node 1's bit.
struct NetworkSnrs {
  double gamma_1 = 0.0;
  double gamma_2 = 0.0;
  double gamma_4 = 0.0;
  double gamma_eq4 = 0.0;
  double p_e4 = 0.0;
};

/// Equivalent single-hop SNR of the two-hop S-R-D path with a
/// demodulate-and-forward relay. Symmetric in its arguments. When the
/// combined error probability underflows, saturates to min(sr, rd).
double gamma_eq(double gamma_sr, double gamma_rd);

/// Conditional end-to-end BER of the C-MRC detector given the link SNRs.
double instantaneous_ber_relay(const LinkSnrs& links);

/// Conditional error probability of node 1's bit in the network-coded
/// system (equivalent-channel model for the two-hop path).
double instantaneous_ber_network(const NetworkSnrs& snrs);

}  // namespace qsampling

#endif
