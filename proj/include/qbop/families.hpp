#pragma once

#include "qbop/core.hpp"

#include <chrono>
#include <functional>
#include <stdexcept>

namespace qbop {

/// How a single quadratic feasibility question is answered.
///   FT1: solve the max-weight independent set to optimality, then compare
///        the optimum against the demand.
///   FT2: same search, but stop at the first independent set meeting the
///        demand.
///   FT3: FT2 under a wall-clock budget; expiry without a witness yields
///        Unknown, which callers treat as "no" and downgrade to heuristic.
struct FeasibilityMode {
  enum class Kind { FT1, FT2, FT3 };
  Kind kind = Kind::FT2;
  std::chrono::milliseconds budget{0};  // FT3 only

  static FeasibilityMode ft1() { return {Kind::FT1, std::chrono::milliseconds{0}}; }
  static FeasibilityMode ft2() { return {Kind::FT2, std::chrono::milliseconds{0}}; }
  static FeasibilityMode ft3(std::chrono::milliseconds budget);
};

std::string to_string(const FeasibilityMode& mode);

enum class Answer { Feasible, Infeasible, Unknown };

struct FeasibilityOutcome {
  Answer answer = Answer::Infeasible;
  Subset witness;       // populated when Feasible
  long nodes = 0;       // search nodes consumed by this test
};

/// A compactly represented family of feasible solutions, answering the
/// quadratic feasibility question against a violation structure.
class Family {
 public:
  virtual ~Family() = default;
  virtual int element_count() const = 0;
  virtual FeasibilityOutcome feasible(const ViolationStructure& v, const FeasibilityMode& mode) const = 0;
  virtual bool contains(const Subset& s) const = 0;
};

/// All non-empty subsets S with sum of weights over S at least demand.
class KnapsackFamily : public Family {
 public:
  KnapsackFamily(std::vector<Cost> weights, Cost demand);

  int element_count() const override { return static_cast<int>(weights_.size()); }
  FeasibilityOutcome feasible(const ViolationStructure& v, const FeasibilityMode& mode) const override;
  bool contains(const Subset& s) const override;

  const std::vector<Cost>& weights() const { return weights_; }
  Cost demand() const { return demand_; }

 private:
  std::vector<Cost> weights_;
  Cost demand_;
};

/// Edge sets of spanning trees of an undirected graph; elements are edge
/// indices. Conflict-free questions reduce to a connectivity test; with
/// conflict pairs the oracle falls back to exhaustive tree search for
/// n <= 12 and reports Unknown above that.
class SpanningTreeFamily : public Family {
 public:
  SpanningTreeFamily(int n, std::vector<std::pair<int, int>> edges);  // 0-based endpoints

  int element_count() const override { return static_cast<int>(edges_.size()); }
  FeasibilityOutcome feasible(const ViolationStructure& v, const FeasibilityMode& mode) const override;
  bool contains(const Subset& s) const override;

  int node_count() const { return n_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  static constexpr int kConflictSearchNodeLimit = 12;

 private:
  int n_;
  std::vector<std::pair<int, int>> edges_;
};

}  // namespace qbop
