#pragma once

#include <vector>

#include "qbop/core.hpp"
#include "qbop/families.hpp"
#include "qbop/generator.hpp"

namespace qbop::test {

// The worked 3-element fixture used across the suite.
inline CostMatrix t1_matrix() {
  return CostMatrix::from_rows({{0, 8, 3}, {8, 1, 4}, {3, 4, 2}});
}

inline KnapsackFamily t1_knapsack() { return KnapsackFamily({4, 5, 6}, 9); }

inline CostMatrix random_matrix(int m, Cost max_value, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<Cost> entries(static_cast<std::size_t>(m) * m);
  for (auto& e : entries) e = static_cast<Cost>(rng.next_in(0, static_cast<std::uint64_t>(max_value)));
  return CostMatrix(m, std::move(entries));
}

inline Subset random_subset(int m, std::uint64_t seed) {
  SplitMix64 rng(seed);
  Subset s;
  for (int i = 0; i < m; ++i)
    if (rng.next_unit() < 0.5) s.push_back(i);
  if (s.empty()) s.push_back(static_cast<int>(rng.next_in(0, m - 1)));
  return s;
}

// Deliberately simple reference for evaluate().
inline Evaluation naive_evaluate(const CostMatrix& c, const Subset& s) {
  Cost mx = c.at(s[0], s[0]), mn = mx;
  for (int i : s)
    for (int j : s) {
      Cost v = c.at(i, j);
      if (v > mx) mx = v;
      if (v < mn) mn = v;
    }
  return {mx, mn, mx - mn};
}

}  // namespace qbop::test
