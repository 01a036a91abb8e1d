#include "qbop/solvers.hpp"

#include <algorithm>
#include <chrono>
#include <limits>

#include "qbop/kernels.hpp"
#include "qbop/masked.hpp"
#include "qbop/qbp.hpp"

namespace qbop {

namespace {

using Clock = std::chrono::steady_clock;

constexpr Cost kNoIncumbent = std::numeric_limits<Cost>::max();

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

FeasibilityOutcome test_window(const CostMatrix& c, Cost alpha, Cost beta, const Family& fam,
                               const FeasibilityMode& mode, SolveStats& stats) {
  ViolationStructure v = kernels::window_scan(c, alpha, beta);
  ++stats.feasibility_tests;
  FeasibilityOutcome out = fam.feasible(v, mode);
  if (out.answer == Answer::Unknown) stats.unknown_seen = true;
  return out;
}

SolveResult finish(SolveStats stats, Clock::time_point start, std::optional<Subset> sol, Cost obj) {
  SolveResult r;
  stats.elapsed_ms = ms_since(start);
  r.stats = stats;
  if (sol && obj != kNoIncumbent) {
    r.solution = std::move(sol);
    r.objective = obj;
    r.status = stats.unknown_seen ? SolveStatus::Heuristic : SolveStatus::Optimal;
  } else {
    r.status = SolveStatus::Infeasible;
  }
  return r;
}

void merge_sub(SolveStats& stats, const SolveStats& sub) {
  stats.feasibility_tests += sub.feasibility_tests;
  stats.unknown_seen = stats.unknown_seen || sub.unknown_seen;
  stats.qbp_max_tests = std::max(stats.qbp_max_tests, sub.qbp_max_tests);
}

}  // namespace

const char* to_string(Algorithm a) {
  switch (a) {
    case Algorithm::Bdt: return "bdt";
    case Algorithm::Tdt: return "tdt";
    case Algorithm::Ib1: return "ib1";
    case Algorithm::Ib2: return "ib2";
    case Algorithm::Db: return "db";
  }
  return "?";
}

std::optional<Algorithm> parse_algorithm(const std::string& name) {
  if (name == "bdt") return Algorithm::Bdt;
  if (name == "tdt") return Algorithm::Tdt;
  if (name == "ib1") return Algorithm::Ib1;
  if (name == "ib2") return Algorithm::Ib2;
  if (name == "db") return Algorithm::Db;
  return std::nullopt;
}

Cost compute_omega(const CostMatrix& c, const Family& fam, const FeasibilityMode& mode, int d, SolveStats* acc) {
  if (d < 1) throw std::invalid_argument("omega: relaxation d must be >= 1");
  SolveStats local;
  SolveStats& stats = acc ? *acc : local;
  ValueLadder ladder(c);
  const int p = ladder.size();
  const Cost top = ladder.value(p);

  if (test_window(c, ladder.value(1), top, fam, mode, stats).answer != Answer::Feasible)
    throw InfeasibleError{};
  if (p == 1) return ladder.value(1);
  if (test_window(c, top, top, fam, mode, stats).answer == Answer::Feasible) return top;

  // l feasible, u infeasible; the optimum is w_l once u - l == 1, and
  // w_{u-1} is always a valid upper bound.
  int l = 1, u = p;
  while (u - l > 1 && u - l >= d) {
    int mid = l + (u - l) / 2;
    if (test_window(c, ladder.value(mid), top, fam, mode, stats).answer == Answer::Feasible)
      l = mid;
    else
      u = mid;
  }
  return ladder.value(u - 1);
}

Cost compute_delta(const CostMatrix& c, const Family& fam, const FeasibilityMode& mode, int d, SolveStats* acc) {
  if (d < 1) throw std::invalid_argument("delta: relaxation d must be >= 1");
  SolveStats local;
  SolveStats& stats = acc ? *acc : local;
  ValueLadder ladder(c);
  const int p = ladder.size();
  const Cost bottom = ladder.value(1);

  if (test_window(c, bottom, ladder.value(p), fam, mode, stats).answer != Answer::Feasible)
    throw InfeasibleError{};
  if (p == 1) return bottom;
  if (test_window(c, bottom, bottom, fam, mode, stats).answer == Answer::Feasible) return bottom;

  // l infeasible, u feasible; w_{l+1} is always a valid lower bound.
  int l = 1, u = p;
  while (u - l > 1 && u - l >= d) {
    int mid = l + (u - l) / 2;
    if (test_window(c, bottom, ladder.value(mid), fam, mode, stats).answer == Answer::Feasible)
      u = mid;
    else
      l = mid;
  }
  return ladder.value(l + 1);
}

SolveResult solve_bdt(const CostMatrix& c, const Family& fam, const FeasibilityMode& mode,
                      const EarlyDetectionConfig& ed, const BdtOptions& opts) {
  const auto start = Clock::now();
  SolveStats stats;
  ValueLadder ladder(c);
  const int p = ladder.size();

  Cost omega = 0;
  if (ed.enabled) {
    if (ed.omega) {
      omega = *ed.omega;
    } else {
      try {
        omega = compute_omega(c, fam, mode, ed.relaxation, &stats);
      } catch (const InfeasibleError&) {
        return finish(stats, start, std::nullopt, kNoIncumbent);
      }
    }
  }

  int l = 1, u = 1;
  std::optional<Subset> sol;
  Cost obj = kNoIncumbent;
  while (l <= p && u <= p) {
    ++stats.iterations;
    FeasibilityOutcome out = test_window(c, ladder.value(l), ladder.value(u), fam, mode, stats);
    if (out.answer == Answer::Feasible) {
      Evaluation e = evaluate(c, out.witness);
      if (e.z < obj) {
        obj = e.z;
        sol = out.witness;
      }
      if (obj == 0) break;
      if (ed.enabled && obj + omega <= ladder.value(u)) {
        stats.early_detection = true;
        break;
      }
      Cost floor = opts.range_jump ? std::max(e.zmin, e.zmax - obj) : e.zmin;
      l = ladder.first_above(floor);
      if (l > u) u = l;
    } else {
      ++u;
    }
  }
  return finish(stats, start, std::move(sol), obj);
}

SolveResult solve_tdt(const CostMatrix& c, const Family& fam, const FeasibilityMode& mode,
                      const EarlyDetectionConfig& ed) {
  const auto start = Clock::now();
  SolveStats stats;
  ValueLadder ladder(c);
  const int p = ladder.size();

  Cost delta = 0;
  if (ed.enabled) {
    if (ed.delta) {
      delta = *ed.delta;
    } else {
      try {
        delta = compute_delta(c, fam, mode, ed.relaxation, &stats);
      } catch (const InfeasibleError&) {
        return finish(stats, start, std::nullopt, kNoIncumbent);
      }
    }
  }

  int l = p, u = p;
  std::optional<Subset> sol;
  Cost obj = kNoIncumbent;
  while (l >= 1 && u >= 1) {
    ++stats.iterations;
    FeasibilityOutcome out = test_window(c, ladder.value(l), ladder.value(u), fam, mode, stats);
    if (out.answer == Answer::Feasible) {
      Evaluation e = evaluate(c, out.witness);
      if (e.z < obj) {
        obj = e.z;
        sol = out.witness;
      }
      if (obj == 0) break;
      if (ed.enabled && delta - obj >= ladder.value(l)) {
        stats.early_detection = true;
        break;
      }
      Cost ceiling = std::min(e.zmax, e.zmin + obj);
      u = ladder.last_below(ceiling);
      if (u < l) l = u;
    } else {
      --l;
    }
  }
  return finish(stats, start, std::move(sol), obj);
}

SolveResult solve_ib(const CostMatrix& c, const Family& fam, const FeasibilityMode& mode,
                     const EarlyDetectionConfig& ed, IbVariant variant) {
  const auto start = Clock::now();
  SolveStats stats;
  ValueLadder ladder(c);
  const Cost big = ladder.value(ladder.size()) + 1;

  Cost bound = 0;
  if (ed.enabled) {
    try {
      if (variant == IbVariant::Type1)
        bound = ed.omega ? *ed.omega : compute_omega(c, fam, mode, ed.relaxation, &stats);
      else
        bound = ed.delta ? *ed.delta : compute_delta(c, fam, mode, ed.relaxation, &stats);
    } catch (const InfeasibleError&) {
      return finish(stats, start, std::nullopt, kNoIncumbent);
    }
  }

  Cost low_cut = c.min_entry();
  Cost high_cut = c.max_entry();
  std::optional<Subset> sol;
  Cost obj = kNoIncumbent;

  while (true) {
    ++stats.iterations;
    MaskedMatrix cm{&c, low_cut, high_cut, big};
    SolveResult sub = variant == IbVariant::Type1 ? solve_qbp1(cm, fam, mode) : solve_qbp2(cm, fam, mode);
    merge_sub(stats, sub.stats);
    if (sub.status == SolveStatus::Infeasible) break;

    const Cost z0 = sub.objective;
    const bool exhausted = variant == IbVariant::Type1 ? z0 >= big : z0 <= -big;
    if (exhausted) break;

    Evaluation e = evaluate(c, *sub.solution);
    if (e.z < obj) {
      obj = e.z;
      sol = std::move(*sub.solution);
    }
    if (obj == 0) break;
    if (ed.enabled) {
      const bool fires = variant == IbVariant::Type1 ? obj + bound <= z0 : bound - obj >= z0;
      if (fires) {
        stats.early_detection = true;
        break;
      }
    }
    if (variant == IbVariant::Type1) {
      // Mask everything at or below max{Z_min, Z_max - obj}.
      low_cut = std::max(e.zmin, e.zmax - obj) + 1;
    } else {
      high_cut = std::min(e.zmax, e.zmin + obj) - 1;
    }
  }
  return finish(stats, start, std::move(sol), obj);
}

SolveResult solve_db(const CostMatrix& c, const Family& fam, const FeasibilityMode& mode) {
  const auto start = Clock::now();
  SolveStats stats;
  ValueLadder ladder(c);
  const Cost big = ladder.value(ladder.size()) + 1;

  Cost low_cut = c.min_entry();
  Cost high_cut = c.max_entry();
  std::optional<Subset> sol;
  Cost obj = kNoIncumbent;

  while (true) {
    ++stats.iterations;

    MaskedMatrix cm1{&c, low_cut, high_cut, big};
    SolveResult sub1 = solve_qbp1(cm1, fam, mode);
    merge_sub(stats, sub1.stats);
    if (sub1.status == SolveStatus::Infeasible) break;
    const Cost zbar = sub1.objective;
    if (zbar < big) {
      Evaluation e = evaluate(c, *sub1.solution);
      if (e.z < obj) {
        obj = e.z;
        sol = std::move(*sub1.solution);
      }
      if (obj == 0) break;
      // Raise the lower mask past Z_min of the bottleneck solution.
      low_cut = std::max(low_cut, e.zmin + 1);
    }

    MaskedMatrix cm2{&c, low_cut, high_cut, big};
    SolveResult sub2 = solve_qbp2(cm2, fam, mode);
    merge_sub(stats, sub2.stats);
    if (sub2.status == SolveStatus::Infeasible) break;
    const Cost ztil = sub2.objective;
    if (ztil > -big) {
      Evaluation e = evaluate(c, *sub2.solution);
      if (e.z < obj) {
        obj = e.z;
        sol = std::move(*sub2.solution);
      }
      if (obj == 0) break;
      high_cut = std::min(high_cut, e.zmax - 1);
    }

    if (zbar >= big || ztil <= -big) break;
  }
  return finish(stats, start, std::move(sol), obj);
}

SolveResult solve_with(Algorithm algo, const CostMatrix& c, const Family& fam, const FeasibilityMode& mode,
                       const EarlyDetectionConfig& ed) {
  switch (algo) {
    case Algorithm::Bdt: return solve_bdt(c, fam, mode, ed);
    case Algorithm::Tdt: return solve_tdt(c, fam, mode, ed);
    case Algorithm::Ib1: return solve_ib(c, fam, mode, ed, IbVariant::Type1);
    case Algorithm::Ib2: return solve_ib(c, fam, mode, ed, IbVariant::Type2);
    case Algorithm::Db: return solve_db(c, fam, mode);
  }
  throw std::invalid_argument("unknown algorithm");
}

}  // namespace qbop
