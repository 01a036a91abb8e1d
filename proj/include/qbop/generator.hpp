#pragma once

#include "qbop/core.hpp"
#include "qbop/families.hpp"
#include "qbop/instance.hpp"

#include <cstdint>

namespace qbop {

/// SplitMix64: state advances by the golden-gamma constant, output is the
/// standard two-round mix. The stream for any seed is reproducible across
/// implementations; tests pin the first outputs for seed 42.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1) from the top 53 bits.
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [lo, hi] via 64-bit modulo (bias is negligible for
  /// the small ranges used here and keeps the stream trivially portable).
  std::uint64_t next_in(std::uint64_t lo, std::uint64_t hi) { return lo + next() % (hi - lo + 1); }

 private:
  std::uint64_t state_;
};

/// Normal deviates by the Marsaglia polar method: consume unit pairs until
/// one lands inside the unit disc, emit both deviates of the pair in order
/// (the second is cached and scaled at consumption).
class NormalSampler {
 public:
  explicit NormalSampler(SplitMix64& rng) : rng_(&rng) {}
  double next(double sigma);

 private:
  SplitMix64* rng_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

/// Parameters of the random knapsack instance family: m x m costs are
/// rounded Normal(0, sigma) draws shifted so the minimum is exactly zero,
/// weights are uniform on [0, 1000], and the demand is uniform on
/// [floor(250 m s), floor(750 m s)].
struct GeneratorSpec {
  int m = 0;
  double sigma = 0.0;
  double s = 0.0;
  std::uint64_t seed = 0;
};

Instance generate_qbalkp(const GeneratorSpec& spec);

/// Random connected graph: each of the n(n-1)/2 candidate edges is kept with
/// probability edge_prob; resampled (bounded retries) until connected.
SpanningTreeFamily generate_random_graph(int n, double edge_prob, std::uint64_t seed);

}  // namespace qbop
