#include "qbop/generator.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace qbop {

double NormalSampler::next(double sigma) {
  if (have_spare_) {
    have_spare_ = false;
    return spare_ * sigma;
  }
  double u, v, s;
  do {
    u = 2.0 * rng_->next_unit() - 1.0;
    v = 2.0 * rng_->next_unit() - 1.0;
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  double f = std::sqrt(-2.0 * std::log(s) / s);
  spare_ = v * f;
  have_spare_ = true;
  return u * f * sigma;
}

Instance generate_qbalkp(const GeneratorSpec& spec) {
  if (spec.m <= 1) throw std::invalid_argument("generator: m must be > 1");
  if (!(spec.sigma > 0.0)) throw std::invalid_argument("generator: sigma must be > 0");
  if (!(spec.s >= 0.0 && spec.s <= 1.0)) throw std::invalid_argument("generator: s must be in [0, 1]");

  SplitMix64 rng(spec.seed);
  NormalSampler normal(rng);

  const int m = spec.m;
  std::vector<Cost> entries(static_cast<std::size_t>(m) * m);
  // Row-major draw order; llround gives round-to-nearest, ties away from zero.
  for (auto& e : entries) e = std::llround(normal.next(spec.sigma));
  const Cost shift = *std::min_element(entries.begin(), entries.end());
  for (auto& e : entries) e -= shift;

  std::vector<Cost> weights(m);
  for (auto& w : weights) w = static_cast<Cost>(rng.next_in(0, 1000));

  const auto blo = static_cast<std::uint64_t>(std::floor(250.0 * m * spec.s));
  const auto bhi = static_cast<std::uint64_t>(std::floor(750.0 * m * spec.s));
  const Cost demand = static_cast<Cost>(rng.next_in(blo, bhi));

  return Instance{CostMatrix(m, std::move(entries)), KnapsackFamily(std::move(weights), demand)};
}

SpanningTreeFamily generate_random_graph(int n, double edge_prob, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("graph generator: n must be >= 2");
  if (!(edge_prob > 0.0 && edge_prob <= 1.0)) throw std::invalid_argument("graph generator: q must be in (0, 1]");

  SplitMix64 rng(seed);
  constexpr int kMaxAttempts = 1000;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng.next_unit() < edge_prob) edges.emplace_back(u, v);

    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    int components = n;
    for (auto [u, v] : edges) {
      int ru = find(u), rv = find(v);
      if (ru != rv) {
        parent[ru] = rv;
        --components;
      }
    }
    if (components == 1) return SpanningTreeFamily(n, std::move(edges));
  }
  throw std::runtime_error("graph generator: retry budget exhausted without a connected draw");
}

}  // namespace qbop
