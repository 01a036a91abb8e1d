#pragma once

#include "qbop/core.hpp"
#include "qbop/families.hpp"

#include <span>

namespace qbop {

/// Cost matrix c_ij = a_i + b_j (Sum) or c_ij = a_i * b_j (Product),
/// reconstructed on demand rather than materialized.
struct DecomposableInstance {
  enum class Kind { Sum, Product };
  Kind kind;
  std::vector<Cost> a;
  std::vector<Cost> b;
  SpanningTreeFamily family;
};

DecomposableInstance make_decomposable(DecomposableInstance::Kind kind, std::vector<Cost> a,
                                       std::vector<Cost> b, SpanningTreeFamily family);

CostMatrix materialize(const DecomposableInstance& inst);

/// Linear balanced optimization: minimize max w_i - min w_i over the family,
/// by the ascending double threshold sweep with window-restricted (conflict
/// free) feasibility. base_allowed, when given, removes elements from the
/// ground set before the sweep.
SolveResult solve_lbop(std::span<const Cost> weights, const Family& fam,
                       const std::vector<char>* base_allowed = nullptr);

/// Exact optimum of (a-range + b-range): enumerate ordered pairs of distinct
/// a-values, restrict the ground set to the pair's band, and add the best
/// b-range from the linear solver. The minimizing candidate is attained by
/// the optimum's own value pair.
SolveResult solve_qbop_sum(const DecomposableInstance& inst);

/// Exact optimum of (maxA*maxB - minA*minB): for each a-value pair and each
/// candidate minimum b-value, a bottleneck search minimizes the maximum
/// b-value; candidates dominate the true objective from above and the
/// optimum's own triple attains it.
SolveResult solve_qbop_product(const DecomposableInstance& inst);

}  // namespace qbop
