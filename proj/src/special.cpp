#include "qbop/special.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <limits>
#include <stdexcept>

namespace qbop {

namespace {

using Clock = std::chrono::steady_clock;

constexpr Cost kNoIncumbent = std::numeric_limits<Cost>::max();

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::vector<Cost> distinct_sorted(std::span<const Cost> values, const std::vector<char>* allowed) {
  std::vector<Cost> out;
  for (std::size_t i = 0; i < values.size(); ++i)
    if (!allowed || (*allowed)[i]) out.push_back(values[i]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Conflict-free feasibility on a restricted ground set.
FeasibilityOutcome restricted_feasible(const Family& fam, const std::vector<char>& allowed, SolveStats& stats) {
  ViolationStructure v;
  v.m = fam.element_count();
  v.forbidden.resize(v.m);
  for (int i = 0; i < v.m; ++i) v.forbidden[i] = allowed[i] ? 0 : 1;
  ++stats.feasibility_tests;
  return fam.feasible(v, FeasibilityMode::ft1());
}

struct LbopOutcome {
  std::optional<Subset> solution;
  Cost objective = kNoIncumbent;
};

LbopOutcome lbop_sweep(std::span<const Cost> w, const Family& fam, const std::vector<char>* base_allowed,
                       SolveStats& stats) {
  const int m = fam.element_count();
  if (static_cast<int>(w.size()) != m) throw std::invalid_argument("lbop: weight vector size mismatch");

  std::vector<Cost> vals = distinct_sorted(w, base_allowed);
  const int q = static_cast<int>(vals.size());
  LbopOutcome best;

  std::vector<char> allowed(m);
  auto window_allowed = [&](Cost lo, Cost hi) {
    for (int i = 0; i < m; ++i)
      allowed[i] = (!base_allowed || (*base_allowed)[i]) && w[i] >= lo && w[i] <= hi;
  };

  int u = 0;
  for (int l = 0; l < q; ++l) {
    if (u < l) u = l;
    std::optional<Subset> witness;
    while (u < q) {
      window_allowed(vals[l], vals[u]);
      FeasibilityOutcome out = restricted_feasible(fam, allowed, stats);
      if (out.answer == Answer::Feasible) {
        witness = std::move(out.witness);
        break;
      }
      ++u;
    }
    if (!witness) break;  // even the widest window anchored at l fails; higher anchors only shrink it
    Cost cand = vals[u] - vals[l];
    if (cand < best.objective) {
      best.objective = cand;
      best.solution = std::move(witness);
    }
    if (best.objective == 0) break;
  }
  return best;
}

SolveResult as_result(LbopOutcome&& out, SolveStats stats, Clock::time_point start) {
  SolveResult r;
  stats.elapsed_ms = ms_since(start);
  r.stats = stats;
  if (out.solution) {
    r.solution = std::move(out.solution);
    r.objective = out.objective;
    r.status = SolveStatus::Optimal;
  } else {
    r.status = SolveStatus::Infeasible;
  }
  return r;
}

}  // namespace

DecomposableInstance make_decomposable(DecomposableInstance::Kind kind, std::vector<Cost> a,
                                       std::vector<Cost> b, SpanningTreeFamily family) {
  const int m = family.element_count();
  if (static_cast<int>(a.size()) != m || static_cast<int>(b.size()) != m)
    throw std::invalid_argument("decomposable: a and b must have one value per element");
  for (Cost v : a)
    if (v < 0) throw std::invalid_argument("decomposable: a values must be non-negative");
  for (Cost v : b)
    if (v < 0) throw std::invalid_argument("decomposable: b values must be non-negative");
  return DecomposableInstance{kind, std::move(a), std::move(b), std::move(family)};
}

CostMatrix materialize(const DecomposableInstance& inst) {
  const int m = static_cast<int>(inst.a.size());
  std::vector<Cost> entries(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      entries[static_cast<std::size_t>(i) * m + j] = inst.kind == DecomposableInstance::Kind::Sum
                                                         ? inst.a[i] + inst.b[j]
                                                         : inst.a[i] * inst.b[j];
  return CostMatrix(m, std::move(entries));
}

SolveResult solve_lbop(std::span<const Cost> weights, const Family& fam, const std::vector<char>* base_allowed) {
  const auto start = Clock::now();
  SolveStats stats;
  LbopOutcome out = lbop_sweep(weights, fam, base_allowed, stats);
  return as_result(std::move(out), stats, start);
}

SolveResult solve_qbop_sum(const DecomposableInstance& inst) {
  if (inst.kind != DecomposableInstance::Kind::Sum) throw std::invalid_argument("expected a sum-decomposable instance");
  const auto start = Clock::now();
  SolveStats stats;
  const Family& fam = inst.family;
  const int m = fam.element_count();

  std::vector<Cost> avals = distinct_sorted(inst.a, nullptr);
  std::optional<Subset> sol;
  Cost best = kNoIncumbent;

  std::vector<char> allowed(m);
  for (std::size_t ai = 0; ai < avals.size(); ++ai) {
    for (std::size_t bi = ai; bi < avals.size(); ++bi) {
      const Cost lo = avals[ai], hi = avals[bi];
      if (best != kNoIncumbent && hi - lo >= best) break;  // candidates only grow with bi
      for (int i = 0; i < m; ++i) allowed[i] = inst.a[i] >= lo && inst.a[i] <= hi;
      ++stats.iterations;
      LbopOutcome sub = lbop_sweep(inst.b, fam, &allowed, stats);
      if (!sub.solution) continue;
      Cost cand = (hi - lo) + sub.objective;
      if (cand < best) {
        best = cand;
        sol = std::move(sub.solution);
      }
    }
  }
  LbopOutcome out;
  out.objective = best;
  out.solution = std::move(sol);
  return as_result(std::move(out), stats, start);
}

SolveResult solve_qbop_product(const DecomposableInstance& inst) {
  if (inst.kind != DecomposableInstance::Kind::Product)
    throw std::invalid_argument("expected a product-decomposable instance");
  const auto start = Clock::now();
  SolveStats stats;
  const Family& fam = inst.family;
  const int m = fam.element_count();

  std::vector<Cost> avals = distinct_sorted(inst.a, nullptr);
  std::optional<Subset> sol;
  Cost best = kNoIncumbent;

  std::vector<char> band(m), allowed(m);
  for (std::size_t ai = 0; ai < avals.size(); ++ai) {
    for (std::size_t bi = ai; bi < avals.size(); ++bi) {
      const Cost alo = avals[ai], ahi = avals[bi];
      bool band_nonempty = false;
      for (int i = 0; i < m; ++i) {
        band[i] = inst.a[i] >= alo && inst.a[i] <= ahi;
        band_nonempty = band_nonempty || band[i];
      }
      if (!band_nonempty) continue;

      std::vector<Cost> bvals = distinct_sorted(inst.b, &band);
      for (Cost gamma : bvals) {
        // tau >= gamma, so the candidate is at least (ahi - alo) * gamma.
        if (best != kNoIncumbent && (ahi - alo) * gamma >= best) break;

        // Bottleneck: minimize max b over members within the band with b >= gamma.
        std::vector<Cost> taus;
        for (int i = 0; i < m; ++i)
          if (band[i] && inst.b[i] >= gamma) taus.push_back(inst.b[i]);
        std::sort(taus.begin(), taus.end());
        taus.erase(std::unique(taus.begin(), taus.end()), taus.end());

        int lo = 0, hi = static_cast<int>(taus.size()) - 1;
        std::optional<Subset> witness;
        int witness_idx = -1;
        auto probe = [&](int idx) {
          for (int i = 0; i < m; ++i)
            allowed[i] = band[i] && inst.b[i] >= gamma && inst.b[i] <= taus[idx];
          ++stats.iterations;
          return restricted_feasible(fam, allowed, stats);
        };
        while (lo < hi) {
          int mid = lo + (hi - lo) / 2;
          FeasibilityOutcome out = probe(mid);
          if (out.answer == Answer::Feasible) {
            hi = mid;
            witness = std::move(out.witness);
            witness_idx = mid;
          } else {
            lo = mid + 1;
          }
        }
        if (witness_idx != lo) {
          FeasibilityOutcome out = probe(lo);
          if (out.answer != Answer::Feasible) continue;  // no member in this band at all
          witness = std::move(out.witness);
        }
        Cost cand = ahi * taus[lo] - alo * gamma;
        if (cand < best) {
          best = cand;
          sol = std::move(witness);
        }
      }
    }
  }
  LbopOutcome out;
  out.objective = best;
  out.solution = std::move(sol);
  return as_result(std::move(out), stats, start);
}

}  // namespace qbop
