#ifndef QSAMPLING_SIMULATE_HPP
#define QSAMPLING_SIMULATE_HPP

#include <cstdint>

namespace qsampling {

/// Average SNR and per-link Rayleigh variance scales.
struct ChannelConfig {
  double mean_snr = 1.0;  // gamma_bar = P/N0, linear
  double variance_sr = 1.0;
  double variance_rd = 1.0;
  double variance_sd = 1.0;
};

struct SimEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  bool low_confidence = false;  // fewer than 100 error events (symbol counting)
};

/// Symbol-level BPSK simulation of the C-MRC relay detector. Deterministic
/// for fixed (config, trials, seed) regardless of worker count.
SimEstimate simulate_relay_symbol(const ChannelConfig& config,
                                  std::uint64_t trials, std::uint64_t seed);

/// Semi-analytic average of the conditional relay BER over channel draws.
SimEstimate semi_analytic_relay(const ChannelConfig& config,
                                std::uint64_t trials, std::uint64_t seed);

/// Semi-analytic averages of the building-block expectations.
SimEstimate semi_analytic_i0(double mean_snr, double scale_a,
                             std::uint64_t trials, std::uint64_t seed);
SimEstimate semi_analytic_i1(double mean_snr, double a1, double a2,
                             std::uint64_t trials, std::uint64_t seed);
SimEstimate semi_analytic_i2(double mean_snr, std::uint64_t trials,
                             std::uint64_t seed);

/// Semi-analytic average of node 1's conditional BER in the network-coded
/// system; the two-hop path is modeled through the equivalent channel.
SimEstimate simulate_network_node1(const ChannelConfig& config,
                                   std::uint64_t trials, std::uint64_t seed);

/// Worker threads used by the simulators: the QSAMPLING_THREADS environment
/// variable when set, otherwise all hardware threads.
unsigned simulation_threads();

}  // namespace qsampling

#endif
