#include "qsampling/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qsampling/special_functions.hpp"

namespace qsampling {

namespace {

double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

// Shared body of the relay and network expressions: the C-MRC combiner BER
// given the direct SNR, the equivalent relayed SNR, the relayed-hop SNR
// and the probability that the forwarded bit is wrong.
double cmrc_ber(double direct, double eq, double hop, double p_wrong) {
  const double ratio = eq > 0.0 ? eq * eq / hop : 0.0;
  const double denom = std::sqrt(direct + ratio);
  double arg_good = 0.0;
  double arg_bad = 0.0;
  if (denom > 0.0) {
    const double sqrt2 = std::sqrt(2.0);
    arg_good = sqrt2 * (direct + eq) / denom;
    arg_bad = sqrt2 * (direct - eq) / denom;
  }
  return (1.0 - p_wrong) * gaussian_q(arg_good) + p_wrong * gaussian_q(arg_bad);
}

}  // namespace

double gamma_eq(double gamma_sr, double gamma_rd) {
  if (!(gamma_sr >= 0.0) || !(gamma_rd >= 0.0)) {
    throw std::domain_error("gamma_eq: negative SNR");
  }
  const double p_sr = gaussian_q(std::sqrt(2.0 * gamma_sr));
  const double p_rd = gaussian_q(std::sqrt(2.0 * gamma_rd));
  const double p = (1.0 - p_sr) * p_rd + (1.0 - p_rd) * p_sr;
  if (p < 1e-300) {
    // Both links near-perfect; continuous with the analytic limit.
    return std::min(gamma_sr, gamma_rd);
  }
  const double z = gaussian_q_inv(p);
  return 0.5 * z * z;
}

double instantaneous_ber_relay(const LinkSnrs& links) {
  if (!(links.gamma_sr >= 0.0) || !(links.gamma_rd >= 0.0) ||
      !(links.gamma_sd >= 0.0)) {
    throw std::domain_error("instantaneous_ber_relay: negative SNR");
  }
  const double eq = gamma_eq(links.gamma_sr, links.gamma_rd);
  const double p_sr = gaussian_q(std::sqrt(2.0 * links.gamma_sr));
  return clamp01(cmrc_ber(links.gamma_sd, eq, links.gamma_rd, p_sr));
}

double instantaneous_ber_network(const NetworkSnrs& snrs) {
  if (!(snrs.gamma_1 >= 0.0) || !(snrs.gamma_2 >= 0.0) ||
      !(snrs.gamma_4 >= 0.0) || !(snrs.gamma_eq4 >= 0.0) ||
      !(snrs.p_e4 >= 0.0 && snrs.p_e4 <= 0.5)) {
    throw std::domain_error("instantaneous_ber_network: invalid state");
  }
  const double relayed =
      cmrc_ber(snrs.gamma_1, snrs.gamma_eq4, snrs.gamma_4, snrs.p_e4);
  const double direct =
      gaussian_q(std::sqrt(2.0 * (snrs.gamma_1 + snrs.gamma_2)));
  return clamp01(relayed + direct);
}

}  // namespace qsampling
