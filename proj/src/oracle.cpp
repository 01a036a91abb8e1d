#include "qbop/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qbop {

namespace {

void enumerate_knapsack(const KnapsackFamily& fam, const std::function<void(const Subset&)>& visit) {
  const int m = fam.element_count();
  if (m > kOracleKnapsackLimit)
    throw std::invalid_argument("oracle: knapsack enumeration limited to m <= 20");
  const auto& a = fam.weights();
  Subset s;
  for (unsigned mask = 1; mask < (1u << m); ++mask) {
    Cost total = 0;
    s.clear();
    for (int i = 0; i < m; ++i)
      if (mask & (1u << i)) {
        total += a[i];
        s.push_back(i);
      }
    if (total >= fam.demand()) visit(s);
  }
}

struct TreeEnum {
  const SpanningTreeFamily& fam;
  const std::function<void(const Subset&)>& visit;
  Subset chosen;

  void rec(int next, std::vector<int> parent, int components) {
    if (components == 1) {
      visit(chosen);
      return;
    }
    const int m = fam.element_count();
    if (m - next < components - 1) return;  // cannot connect whatever remains

    auto find = [&parent](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    auto [u, v] = fam.edges()[next];
    int ru = find(u), rv = find(v);
    if (ru != rv) {
      std::vector<int> merged = parent;
      merged[ru] = rv;
      chosen.push_back(next);
      rec(next + 1, std::move(merged), components - 1);
      chosen.pop_back();
    }
    rec(next + 1, std::move(parent), components);
  }
};

void enumerate_trees(const SpanningTreeFamily& fam, const std::function<void(const Subset&)>& visit) {
  if (fam.node_count() > kOracleTreeLimit)
    throw std::invalid_argument("oracle: spanning tree enumeration limited to n <= 8");
  if (fam.node_count() < 2) return;
  TreeEnum e{fam, visit, {}};
  std::vector<int> parent(fam.node_count());
  std::iota(parent.begin(), parent.end(), 0);
  e.rec(0, std::move(parent), fam.node_count());
}

}  // namespace

void for_each_feasible(const Family& fam, const std::function<void(const Subset&)>& visit) {
  if (auto* k = dynamic_cast<const KnapsackFamily*>(&fam)) {
    enumerate_knapsack(*k, visit);
    return;
  }
  if (auto* t = dynamic_cast<const SpanningTreeFamily*>(&fam)) {
    enumerate_trees(*t, visit);
    return;
  }
  throw std::invalid_argument("oracle: unsupported family");
}

OracleReport enumerate_optimum(const Family& fam, OracleObjective objective, const OracleInputs& in) {
  auto value_of = [&](const Subset& s) -> Cost {
    switch (objective) {
      case OracleObjective::Balanced: {
        if (in.masked) {
          Evaluation e = evaluate_masked(*in.masked, s);
          return e.z;
        }
        return evaluate(*in.cost, s).z;
      }
      case OracleObjective::Qbp1:
        return in.masked ? evaluate_masked(*in.masked, s).zmax : evaluate(*in.cost, s).zmax;
      case OracleObjective::Qbp2:
        return in.masked ? evaluate_masked(*in.masked, s).zmin : evaluate(*in.cost, s).zmin;
      case OracleObjective::LinearBalanced: {
        Cost lo = (*in.weights)[s[0]], hi = lo;
        for (int i : s) {
          lo = std::min(lo, (*in.weights)[i]);
          hi = std::max(hi, (*in.weights)[i]);
        }
        return hi - lo;
      }
      case OracleObjective::SumDecomp: {
        Cost alo = (*in.a)[s[0]], ahi = alo, blo = (*in.b)[s[0]], bhi = blo;
        for (int i : s) {
          alo = std::min(alo, (*in.a)[i]);
          ahi = std::max(ahi, (*in.a)[i]);
          blo = std::min(blo, (*in.b)[i]);
          bhi = std::max(bhi, (*in.b)[i]);
        }
        return (ahi - alo) + (bhi - blo);
      }
      case OracleObjective::ProductDecomp: {
        Cost alo = (*in.a)[s[0]], ahi = alo, blo = (*in.b)[s[0]], bhi = blo;
        for (int i : s) {
          alo = std::min(alo, (*in.a)[i]);
          ahi = std::max(ahi, (*in.a)[i]);
          blo = std::min(blo, (*in.b)[i]);
          bhi = std::max(bhi, (*in.b)[i]);
        }
        return ahi * bhi - alo * blo;
      }
    }
    throw std::logic_error("oracle: unhandled objective");
  };

  const bool maximize = objective == OracleObjective::Qbp2;
  OracleReport report;
  for_each_feasible(fam, [&](const Subset& s) {
    ++report.feasible_count;
    Cost v = value_of(s);
    bool better = !report.optimum || (maximize ? v > *report.optimum : v < *report.optimum);
    if (better) {
      report.optimum = v;
      report.witnesses.clear();
    }
    if (v == *report.optimum) report.witnesses.push_back(s);
  });
  return report;
}

}  // namespace qbop
