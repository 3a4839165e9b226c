#include "qsampling/simulate.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <thread>
#include <vector>

#include "qsampling/scenario.hpp"
#include "qsampling/special_functions.hpp"

namespace qsampling {

namespace {

constexpr std::uint64_t kBlockSize = 1u << 16;

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// xoshiro256++; each block gets its own stream seeded from (seed, block).
class Rng {
 public:
  Rng(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t sm = seed ^ (0x6c62272e07bb0142ULL * (stream + 1));
    for (auto& word : s_) word = splitmix64(sm);
  }

  std::uint64_t next() {
    const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  // uniform in (0, 1]
  double uniform_pos() {
    return (static_cast<double>(next() >> 11) + 1.0) * 0x1p-53;
  }

  // uniform in [0, 1)
  double uniform() { return static_cast<double>(next() >> 11) * 0x1p-53; }

  double exponential(double mean) { return -mean * std::log(uniform_pos()); }

  // pair of independent standard normals (Box-Muller)
  void normal_pair(double& z0, double& z1) {
    const double r = std::sqrt(-2.0 * std::log(uniform_pos()));
    const double a = 2.0 * M_PI * uniform();
    z0 = r * std::cos(a);
    z1 = r * std::sin(a);
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }
  std::uint64_t s_[4];
};

struct BlockSums {
  double sum = 0.0;
  double sum_sq = 0.0;
  std::uint64_t count = 0;  // error events for the symbol-level simulator
};

// Runs `trials` split into fixed blocks, each with its own RNG stream.
// Blocks are processed by a pool of workers but reduced in block order,
// so the result is independent of the worker count.
std::vector<BlockSums> run_blocks(
    std::uint64_t trials, std::uint64_t seed,
    const std::function<void(Rng&, std::uint64_t, BlockSums&)>& body) {
  if (trials < 1) throw std::domain_error("simulate: trials must be >= 1");
  const std::uint64_t n_blocks = (trials + kBlockSize - 1) / kBlockSize;
  std::vector<BlockSums> blocks(n_blocks);
  std::atomic<std::uint64_t> next_block{0};
  auto worker = [&]() {
    for (;;) {
      const std::uint64_t b = next_block.fetch_add(1);
      if (b >= n_blocks) return;
      const std::uint64_t n =
          std::min<std::uint64_t>(kBlockSize, trials - b * kBlockSize);
      Rng rng(seed, b);
      body(rng, n, blocks[b]);
    }
  };
  const unsigned n_threads =
      std::max(1u, std::min<unsigned>(simulation_threads(),
                                      static_cast<unsigned>(n_blocks)));
  if (n_threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    for (unsigned i = 0; i < n_threads; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return blocks;
}

// Ordered compensated reduction of per-block sums.
SimEstimate reduce_mean(const std::vector<BlockSums>& blocks,
                        std::uint64_t trials, std::uint64_t seed) {
  double sum = 0.0, comp = 0.0, sum_sq = 0.0, comp_sq = 0.0;
  for (const BlockSums& b : blocks) {
    double y = b.sum - comp;
    double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
    y = b.sum_sq - comp_sq;
    t = sum_sq + y;
    comp_sq = (t - sum_sq) - y;
    sum_sq = t;
  }
  const double n = static_cast<double>(trials);
  SimEstimate est;
  est.mean = sum / n;
  const double var = std::max(0.0, sum_sq / n - est.mean * est.mean);
  est.std_error = std::sqrt(var / n);
  est.trials = trials;
  est.seed = seed;
  return est;
}

SimEstimate semi_analytic(std::uint64_t trials, std::uint64_t seed,
                          const std::function<double(Rng&)>& draw) {
  auto blocks = run_blocks(trials, seed,
                           [&](Rng& rng, std::uint64_t n, BlockSums& out) {
                             double s = 0.0, c = 0.0, sq = 0.0, cq = 0.0;
                             for (std::uint64_t i = 0; i < n; ++i) {
                               const double v = draw(rng);
                               double y = v - c;
                               double t = s + y;
                               c = (t - s) - y;
                               s = t;
                               y = v * v - cq;
                               t = sq + y;
                               cq = (t - sq) - y;
                               sq = t;
                             }
                             out.sum = s;
                             out.sum_sq = sq;
                           });
  return reduce_mean(blocks, trials, seed);
}

}  // namespace

unsigned simulation_threads() {
  if (const char* env = std::getenv("QSAMPLING_THREADS")) {
    const long v = std::atol(env);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

SimEstimate simulate_relay_symbol(const ChannelConfig& config,
                                  std::uint64_t trials, std::uint64_t seed) {
  const double root_snr = std::sqrt(config.mean_snr);
  auto blocks = run_blocks(
      trials, seed, [&](Rng& rng, std::uint64_t n, BlockSums& out) {
        std::uint64_t errors = 0;
        for (std::uint64_t i = 0; i < n; ++i) {
          // Channel draws: CN(0, sigma^2) per link, scaled by sqrt(P/N0).
          double hr_sr, hi_sr, hr_rd, hi_rd, hr_sd, hi_sd;
          rng.normal_pair(hr_sr, hi_sr);
          rng.normal_pair(hr_rd, hi_rd);
          rng.normal_pair(hr_sd, hi_sd);
          const double c_sr = root_snr * std::sqrt(0.5 * config.variance_sr);
          const double c_rd = root_snr * std::sqrt(0.5 * config.variance_rd);
          const double c_sd = root_snr * std::sqrt(0.5 * config.variance_sd);
          hr_sr *= c_sr;
          hi_sr *= c_sr;
          hr_rd *= c_rd;
          hi_rd *= c_rd;
          hr_sd *= c_sd;
          hi_sd *= c_sd;
          const double g_sr = hr_sr * hr_sr + hi_sr * hi_sr;
          const double g_rd = hr_rd * hr_rd + hi_rd * hi_rd;
          const double g_sd = hr_sd * hr_sd + hi_sd * hi_sd;

          const double x = (rng.next() & 1) ? 1.0 : -1.0;

          // Unit-variance complex noise per observation (N0 = 1).
          double nr, ni;
          rng.normal_pair(nr, ni);
          const double ysr_r = hr_sr * x + nr * std::sqrt(0.5);
          const double ysr_i = hi_sr * x + ni * std::sqrt(0.5);
          // ML detection at the relay: sign of Re(h_sr^* y_sr)
          const double x_relay =
              (hr_sr * ysr_r + hi_sr * ysr_i) >= 0.0 ? 1.0 : -1.0;

          rng.normal_pair(nr, ni);
          const double ysd_r = hr_sd * x + nr * std::sqrt(0.5);
          const double ysd_i = hi_sd * x + ni * std::sqrt(0.5);
          rng.normal_pair(nr, ni);
          const double yrd_r = hr_rd * x_relay + nr * std::sqrt(0.5);
          const double yrd_i = hi_rd * x_relay + ni * std::sqrt(0.5);

          // C-MRC combining: w1 = h_sd^*, w2 = (gamma_eq/gamma_rd) h_rd^*.
          const double eq = gamma_eq(g_sr, g_rd);
          const double w2 = g_rd > 0.0 ? eq / g_rd : 0.0;
          const double metric = (hr_sd * ysd_r + hi_sd * ysd_i) +
                                w2 * (hr_rd * yrd_r + hi_rd * yrd_i);
          const double x_dest = metric >= 0.0 ? 1.0 : -1.0;
          if (x_dest != x) ++errors;
        }
        out.count = errors;
      });

  std::uint64_t errors = 0;
  for (const BlockSums& b : blocks) errors += b.count;
  const double n = static_cast<double>(trials);
  SimEstimate est;
  est.mean = static_cast<double>(errors) / n;
  // Wilson-style interval (z = 1) for the standard error at low counts.
  const double p_tilde = (static_cast<double>(errors) + 0.5) / (n + 1.0);
  est.std_error = std::sqrt(p_tilde * (1.0 - p_tilde) / (n + 1.0));
  est.trials = trials;
  est.seed = seed;
  est.low_confidence = errors < 100;
  return est;
}

SimEstimate semi_analytic_relay(const ChannelConfig& config,
                                std::uint64_t trials, std::uint64_t seed) {
  const double m_sr = config.mean_snr * config.variance_sr;
  const double m_rd = config.mean_snr * config.variance_rd;
  const double m_sd = config.mean_snr * config.variance_sd;
  return semi_analytic(trials, seed, [&](Rng& rng) {
    LinkSnrs links;
    links.gamma_sr = rng.exponential(m_sr);
    links.gamma_rd = rng.exponential(m_rd);
    links.gamma_sd = rng.exponential(m_sd);
    return instantaneous_ber_relay(links);
  });
}

SimEstimate semi_analytic_i0(double mean_snr, double scale_a,
                             std::uint64_t trials, std::uint64_t seed) {
  return semi_analytic(trials, seed, [&](Rng& rng) {
    return gaussian_q(std::sqrt(scale_a * rng.exponential(mean_snr)));
  });
}

SimEstimate semi_analytic_i1(double mean_snr, double a1, double a2,
                             std::uint64_t trials, std::uint64_t seed) {
  return semi_analytic(trials, seed, [&](Rng& rng) {
    return gaussian_q(std::sqrt(a1 * rng.exponential(mean_snr) +
                                a2 * rng.exponential(mean_snr)));
  });
}

SimEstimate semi_analytic_i2(double mean_snr, std::uint64_t trials,
                             std::uint64_t seed) {
  return semi_analytic(trials, seed, [&](Rng& rng) {
    const double x = rng.exponential(mean_snr);
    const double y = rng.exponential(mean_snr);
    return gaussian_q(std::sqrt(2.0 * std::min(x, y)));
  });
}

SimEstimate simulate_network_node1(const ChannelConfig& config,
                                   std::uint64_t trials, std::uint64_t seed) {
  const double s = config.mean_snr;
  return semi_analytic(trials, seed, [&](Rng& rng) {
    NetworkSnrs state;
    state.gamma_1 = rng.exponential(s);
    state.gamma_2 = rng.exponential(s);
    state.gamma_4 = rng.exponential(s);
    const double gamma_up = rng.exponential(s);
    state.gamma_eq4 = gamma_eq(gamma_up, state.gamma_4);
    state.p_e4 = gaussian_q(std::sqrt(2.0 * state.gamma_eq4));
    return instantaneous_ber_network(state);
  });
}

}  // namespace qsampling
