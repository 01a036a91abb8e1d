#pragma once

#include "qbop/core.hpp"
#include "qbop/families.hpp"
#include "qbop/masked.hpp"

#include <functional>

namespace qbop {

/// Brute-force ground truth for small instances. Enumeration is complete;
/// the guards fail loudly instead of truncating.
struct OracleReport {
  std::optional<Cost> optimum;      // absent when no feasible solution exists
  std::vector<Subset> witnesses;    // every optimal subset
  long feasible_count = 0;
};

enum class OracleObjective { Balanced, Qbp1, Qbp2, LinearBalanced, SumDecomp, ProductDecomp };

struct OracleInputs {
  const CostMatrix* cost = nullptr;        // Balanced / Qbp1 / Qbp2
  const MaskedMatrix* masked = nullptr;    // optional masked view for Qbp1 / Qbp2 / Balanced
  const std::vector<Cost>* weights = nullptr;  // LinearBalanced
  const std::vector<Cost>* a = nullptr;        // SumDecomp / ProductDecomp
  const std::vector<Cost>* b = nullptr;
};

inline constexpr int kOracleKnapsackLimit = 20;  // elements
inline constexpr int kOracleTreeLimit = 8;       // nodes

/// Visit every feasible subset (knapsack: all 2^m - 1 non-empty subsets with
/// enough weight; trees: every spanning tree). Throws when the size guard is
/// exceeded.
void for_each_feasible(const Family& fam, const std::function<void(const Subset&)>& visit);

OracleReport enumerate_optimum(const Family& fam, OracleObjective objective, const OracleInputs& in);

}  // namespace qbop
