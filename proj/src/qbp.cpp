#include "qbop/qbp.hpp"

#include <cassert>
#include <chrono>

#include "qbop/kernels.hpp"

namespace qbop {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// One feasibility test at a masked threshold. Unknown counts as infeasible
// at that threshold and taints the result status.
bool probe(const MaskedMatrix& cm, Cost limit, bool above, const Family& fam, const FeasibilityMode& mode,
           SolveStats& stats, Subset& witness_out, bool& got_witness) {
  ViolationStructure v = above ? kernels::eff_above_scan(cm, limit) : kernels::eff_below_scan(cm, limit);
  ++stats.feasibility_tests;
  ++stats.iterations;
  FeasibilityOutcome out = fam.feasible(v, mode);
  if (out.answer == Answer::Unknown) stats.unknown_seen = true;
  if (out.answer == Answer::Feasible) {
    witness_out = std::move(out.witness);
    got_witness = true;
    return true;
  }
  return false;
}

SolveResult finish(SolveStats stats, Clock::time_point start, std::optional<Subset> sol, Cost obj) {
  SolveResult r;
  stats.qbp_max_tests = stats.feasibility_tests;
  stats.elapsed_ms = ms_since(start);
  r.stats = stats;
  if (sol) {
    r.solution = std::move(sol);
    r.objective = obj;
    r.status = stats.unknown_seen ? SolveStatus::Heuristic : SolveStatus::Optimal;
  } else {
    r.status = SolveStatus::Infeasible;
  }
  return r;
}

}  // namespace

SolveResult solve_qbp1(const MaskedMatrix& cm, const Family& fam, const FeasibilityMode& mode) {
  const auto start = Clock::now();
  SolveStats stats;
  ValueLadder base(*cm.base);
  std::vector<Cost> values = masked_value_ladder(cm, base);
  const int k = static_cast<int>(values.size());

  // Invariant: every index below lo is infeasible; hi is the smallest index
  // known feasible (with cached witness) or the untested top of the ladder.
  int lo = 0, hi = k - 1;
  Subset witness;
  bool got = false;
  int witness_idx = -1;
  while (lo < hi) {
    int mid = lo + (hi - lo) / 2;
    if (probe(cm, values[mid], /*above=*/true, fam, mode, stats, witness, got)) {
      hi = mid;
      witness_idx = mid;
    } else {
      lo = mid + 1;
    }
  }
  if (witness_idx != lo) {
    got = false;
    if (probe(cm, values[lo], /*above=*/true, fam, mode, stats, witness, got) ) {
      witness_idx = lo;
    } else {
      // Even the fully unconstrained threshold failed: the family is empty
      // (or every test within budget expired).
      return finish(stats, start, std::nullopt, 0);
    }
  }
  assert(evaluate_masked(cm, witness).zmax == values[lo]);
  return finish(stats, start, std::move(witness), values[lo]);
}

SolveResult solve_qbp2(const MaskedMatrix& cm, const Family& fam, const FeasibilityMode& mode) {
  const auto start = Clock::now();
  SolveStats stats;
  ValueLadder base(*cm.base);
  std::vector<Cost> values = masked_value_ladder(cm, base);
  const int k = static_cast<int>(values.size());

  // Mirror image: lo is the largest index known feasible (or the untested
  // bottom), every index above hi is infeasible.
  int lo = 0, hi = k - 1;
  Subset witness;
  bool got = false;
  int witness_idx = -1;
  while (lo < hi) {
    int mid = lo + (hi - lo + 1) / 2;
    if (probe(cm, values[mid], /*above=*/false, fam, mode, stats, witness, got)) {
      lo = mid;
      witness_idx = mid;
    } else {
      hi = mid - 1;
    }
  }
  if (witness_idx != lo) {
    got = false;
    if (probe(cm, values[lo], /*above=*/false, fam, mode, stats, witness, got)) {
      witness_idx = lo;
    } else {
      return finish(stats, start, std::nullopt, 0);
    }
  }
  assert(evaluate_masked(cm, witness).zmin == values[lo]);
  return finish(stats, start, std::move(witness), values[lo]);
}

}  // namespace qbop
