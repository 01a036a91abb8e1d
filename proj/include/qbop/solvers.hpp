#pragma once

#include "qbop/core.hpp"
#include "qbop/families.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace qbop {

/// Thrown by the bound computations when the family itself is empty.
struct InfeasibleError : std::runtime_error {
  InfeasibleError() : std::runtime_error("family has no feasible solution") {}
};

/// Early optimality detection. omega must be at least Z_min of every optimal
/// solution (the max-min bottleneck optimum qualifies); delta must be at most
/// Z_max of every optimal solution (the min-max bottleneck optimum). When a
/// bound is not supplied it is computed with the given ladder-gap relaxation:
/// d = 1 is exact, larger d truncates the bottleneck search early and keeps a
/// valid (weaker) bound.
struct EarlyDetectionConfig {
  bool enabled = false;
  std::optional<Cost> omega;
  std::optional<Cost> delta;
  int relaxation = 1;

  static EarlyDetectionConfig off() { return {}; }
  static EarlyDetectionConfig exact() { return {true, std::nullopt, std::nullopt, 1}; }
  static EarlyDetectionConfig relaxed(int d) { return {true, std::nullopt, std::nullopt, d}; }
};

enum class Algorithm { Bdt, Tdt, Ib1, Ib2, Db };

const char* to_string(Algorithm a);
std::optional<Algorithm> parse_algorithm(const std::string& name);

struct BdtOptions {
  // The lower-threshold jump also skips past Z_max(C,S) - obj. Disabling
  // falls back to the plain next-above-Z_min rule; both reach the same
  // objective.
  bool range_jump = true;
};

/// Bottom-up double threshold search over the value ladder.
SolveResult solve_bdt(const CostMatrix& c, const Family& fam, const FeasibilityMode& mode,
                      const EarlyDetectionConfig& ed = EarlyDetectionConfig::off(),
                      const BdtOptions& opts = {});

/// Top-down mirror of the bottom-up search.
SolveResult solve_tdt(const CostMatrix& c, const Family& fam, const FeasibilityMode& mode,
                      const EarlyDetectionConfig& ed = EarlyDetectionConfig::off());

enum class IbVariant { Type1, Type2 };

/// Iterative bottleneck algorithms: Type1 raises a big-M lower mask around
/// successive min-Z_max solutions; Type2 lowers a -M upper mask around
/// successive max-Z_min solutions.
SolveResult solve_ib(const CostMatrix& c, const Family& fam, const FeasibilityMode& mode,
                     const EarlyDetectionConfig& ed = EarlyDetectionConfig::off(),
                     IbVariant variant = IbVariant::Type1);

/// Alternates the two bottleneck directions on one cumulatively masked
/// matrix. No early-detection hook.
SolveResult solve_db(const CostMatrix& c, const Family& fam, const FeasibilityMode& mode);

/// Upper bound on Z_min of any optimal solution: the max-min bottleneck
/// optimum, or the relaxed bound w_{u-1} when the search interval is cut to
/// fewer than d ladder indices. Tests are accumulated into *acc when given.
/// Throws InfeasibleError when the family is empty.
Cost compute_omega(const CostMatrix& c, const Family& fam, const FeasibilityMode& mode, int d = 1,
                   SolveStats* acc = nullptr);

/// Lower bound on Z_max of any optimal solution: the min-max bottleneck
/// optimum, relaxed analogously.
Cost compute_delta(const CostMatrix& c, const Family& fam, const FeasibilityMode& mode, int d = 1,
                   SolveStats* acc = nullptr);

SolveResult solve_with(Algorithm algo, const CostMatrix& c, const Family& fam, const FeasibilityMode& mode,
                       const EarlyDetectionConfig& ed = EarlyDetectionConfig::off());

}  // namespace qbop
