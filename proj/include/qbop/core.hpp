#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace qbop {

/// Pairwise interaction costs are non-negative integers. Integer arithmetic
/// keeps ladder ranks and threshold comparisons exact.
using Cost = std::int64_t;

/// A feasible solution: sorted, duplicate-free 0-based element indices.
using Subset = std::vector<int>;

/// Square matrix of pairwise interaction costs c_ij. The diagonal is
/// meaningful (c_ii is the self-interaction of element i) and no symmetry
/// is assumed.
class CostMatrix {
 public:
  CostMatrix(int m, std::vector<Cost> entries);
  static CostMatrix from_rows(const std::vector<std::vector<Cost>>& rows);

  int size() const { return m_; }
  Cost at(int i, int j) const { return entries_[static_cast<std::size_t>(i) * m_ + j]; }
  std::span<const Cost> entries() const { return entries_; }

  Cost min_entry() const;
  Cost max_entry() const;

 private:
  int m_;
  std::vector<Cost> entries_;  // row-major, m_*m_
};

/// Ascending arrangement w_1 < w_2 < ... < w_p of the distinct entries of a
/// cost matrix. Ranks are 1-based to match the threshold index arithmetic of
/// the double threshold algorithms; rank p+1 acts as the +infinity sentinel.
class ValueLadder {
 public:
  explicit ValueLadder(const CostMatrix& c);
  explicit ValueLadder(std::vector<Cost> ascending_distinct);

  int size() const { return static_cast<int>(values_.size()); }
  Cost value(int rank) const;              // rank in 1..p
  int rank(Cost v) const;                  // exact inverse of value(); throws if absent
  int first_above(Cost v) const;           // smallest rank with value > v, p+1 if none
  int last_below(Cost v) const;            // largest rank with value < v, 0 if none
  std::span<const Cost> values() const { return values_; }

 private:
  std::vector<Cost> values_;
};

/// Inclusive threshold window [alpha, beta].
struct ThresholdWindow {
  Cost alpha;
  Cost beta;
};

/// The violating-pair set E(C, alpha, beta) in reduced form: an element is
/// forbidden when its diagonal entry falls outside the window; a pair {i, j}
/// of unforbidden elements conflicts when either orientation falls outside.
struct ViolationStructure {
  int m = 0;
  std::vector<char> forbidden;                  // size m
  std::vector<std::pair<int, int>> conflicts;   // i < j, both unforbidden

  int forbidden_count() const;
  bool all_forbidden() const;
};

enum class SolveStatus { Optimal, Heuristic, Infeasible };

const char* to_string(SolveStatus s);

/// Counters reported with every solve. Feasibility tests count every oracle
/// invocation, including those made inside the bottleneck binary searches
/// and inside the omega/delta bound computations.
struct SolveStats {
  long feasibility_tests = 0;
  long iterations = 0;
  bool early_detection = false;
  bool unknown_seen = false;       // some time-budgeted test expired
  long qbp_max_tests = 0;          // largest single bottleneck search, in tests
  double elapsed_ms = 0.0;
};

struct SolveResult {
  std::optional<Subset> solution;
  Cost objective = 0;              // meaningful only when solution is present
  SolveStatus status = SolveStatus::Infeasible;
  SolveStats stats;
};

struct Evaluation {
  Cost zmax;
  Cost zmin;
  Cost z;   // zmax - zmin
};

/// Z_max, Z_min and Z over the full Cartesian product S x S, diagonal
/// included. Throws on an empty or invalid subset.
Evaluation evaluate(const CostMatrix& c, const Subset& s);

ValueLadder build_ladder(const CostMatrix& c);

ViolationStructure violation_structure(const CostMatrix& c, const ThresholdWindow& w);

Subset normalized_subset(Subset s);
void validate_subset(const Subset& s, int m);

}  // namespace qbop
