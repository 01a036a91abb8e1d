#include "qbop/families.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>

namespace qbop {

FeasibilityMode FeasibilityMode::ft3(std::chrono::milliseconds budget) {
  if (budget.count() <= 0) throw std::invalid_argument("ft3: budget must be positive");
  return {Kind::FT3, budget};
}

std::string to_string(const FeasibilityMode& mode) {
  switch (mode.kind) {
    case FeasibilityMode::Kind::FT1: return "ft1";
    case FeasibilityMode::Kind::FT2: return "ft2";
    case FeasibilityMode::Kind::FT3: return "ft3=" + std::to_string(mode.budget.count());
  }
  return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

// Fixed-capacity bitset sized for the ground set of one search.
class Bits {
 public:
  explicit Bits(int n) : n_(n), w_((n + 63) / 64, 0) {}

  void set(int i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

  bool empty() const {
    for (auto w : w_)
      if (w) return false;
    return true;
  }

  int intersect_count(const Bits& other) const {
    int n = 0;
    for (std::size_t k = 0; k < w_.size(); ++k) n += std::popcount(w_[k] & other.w_[k]);
    return n;
  }

  void subtract(const Bits& other) {
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= ~other.w_[k];
  }

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t k = 0; k < w_.size(); ++k) {
      std::uint64_t w = w_[k];
      while (w) {
        int bit = std::countr_zero(w);
        fn(static_cast<int>(k * 64 + bit));
        w &= w - 1;
      }
    }
  }

 private:
  int n_;
  std::vector<std::uint64_t> w_;
};

// Branch-and-bound for the max-weight independent set question behind the
// knapsack feasibility test. Branching vertex: highest live conflict degree,
// ties broken by larger weight, then lower index. Upper bound: current
// weight plus the weight of everything still unexcluded.
struct MwisSearch {
  const std::vector<Cost>& a;
  const std::vector<Bits>& adj;
  Cost demand;
  bool optimize;  // FT1 solves to optimality; FT2/FT3 stop at first hit
  std::optional<Clock::time_point> deadline;

  Cost best_weight = -1;
  std::vector<int> best_set;
  std::vector<int> cur;
  bool found = false;
  bool expired = false;
  long nodes = 0;

  bool out_of_time() {
    if (!deadline) return false;
    // Poll the monotonic clock every few dozen nodes.
    if ((nodes & 63) != 0) return false;
    if (Clock::now() >= *deadline) {
      expired = true;
      return true;
    }
    return false;
  }

  int pick_vertex(const Bits& cands) const {
    int best = -1, best_deg = -1;
    Cost best_a = -1;
    cands.for_each([&](int v) {
      int deg = adj[v].intersect_count(cands);
      if (deg > best_deg || (deg == best_deg && (a[v] > best_a || (a[v] == best_a && v < best)))) {
        best = v;
        best_deg = deg;
        best_a = a[v];
      }
    });
    return best;
  }

  void run(Bits cands, Cost weight, Cost remaining) {
    ++nodes;
    if (found || expired || out_of_time()) return;

    Cost bound = weight + remaining;
    if (optimize) {
      if (bound <= best_weight) return;
    } else if (bound < demand) {
      return;
    }

    int v = pick_vertex(cands);
    if (v < 0) {  // leaf
      if (optimize && !cur.empty() && weight > best_weight) {
        best_weight = weight;
        best_set = cur;
      }
      return;
    }

    // include v
    Bits inc = cands;
    inc.reset(v);
    inc.subtract(adj[v]);
    Cost inc_remaining = 0;
    inc.for_each([&](int u) { inc_remaining += a[u]; });
    cur.push_back(v);
    if (!optimize && weight + a[v] >= demand) {
      best_set = cur;
      best_weight = weight + a[v];
      found = true;
      cur.pop_back();
      return;
    }
    run(std::move(inc), weight + a[v], inc_remaining);
    cur.pop_back();
    if (found || expired) return;

    // exclude v
    cands.reset(v);
    run(std::move(cands), weight, remaining - a[v]);
  }
};

struct UnionFind {
  std::vector<int> parent;

  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  bool unite(int x, int y) {
    int rx = find(x), ry = find(y);
    if (rx == ry) return false;
    parent[rx] = ry;
    return true;
  }
};

}  // namespace

KnapsackFamily::KnapsackFamily(std::vector<Cost> weights, Cost demand)
    : weights_(std::move(weights)), demand_(demand) {
  if (weights_.empty()) throw std::invalid_argument("knapsack: at least one element required");
  for (Cost w : weights_)
    if (w < 0) throw std::invalid_argument("knapsack: weights must be non-negative");
  if (demand_ < 0) throw std::invalid_argument("knapsack: demand must be non-negative");
}

bool KnapsackFamily::contains(const Subset& s) const {
  if (s.empty()) return false;
  Cost total = 0;
  for (int i : s) {
    if (i < 0 || i >= element_count()) return false;
    total += weights_[i];
  }
  return total >= demand_;
}

FeasibilityOutcome KnapsackFamily::feasible(const ViolationStructure& v, const FeasibilityMode& mode) const {
  const int m = element_count();
  if (v.m != m) throw std::invalid_argument("feasibility: violation structure size mismatch");

  std::vector<int> live;
  for (int i = 0; i < m; ++i)
    if (!v.forbidden[i]) live.push_back(i);
  if (live.empty()) return {Answer::Infeasible, {}, 0};

  std::vector<Bits> adj(m, Bits(m));
  for (auto [i, j] : v.conflicts) {
    adj[i].set(j);
    adj[j].set(i);
  }

  Bits cands(m);
  Cost total = 0;
  for (int i : live) {
    cands.set(i);
    total += weights_[i];
  }

  MwisSearch search{weights_, adj, demand_, mode.kind == FeasibilityMode::Kind::FT1,
                    mode.kind == FeasibilityMode::Kind::FT3
                        ? std::optional<Clock::time_point>(Clock::now() + mode.budget)
                        : std::nullopt,
                    -1, {}, {}, false, false, 0};
  if (search.optimize) {
    // Seed with the best singleton so the witness is never empty.
    int seed = live[0];
    for (int i : live)
      if (weights_[i] > weights_[seed]) seed = i;
    search.best_weight = weights_[seed];
    search.best_set = {seed};
  }
  search.run(std::move(cands), 0, total);

  if (search.expired && !search.found) return {Answer::Unknown, {}, search.nodes};

  if (search.optimize) {
    if (search.best_weight >= demand_)
      return {Answer::Feasible, normalized_subset(search.best_set), search.nodes};
    return {Answer::Infeasible, {}, search.nodes};
  }
  if (search.found) return {Answer::Feasible, normalized_subset(search.best_set), search.nodes};
  return {Answer::Infeasible, {}, search.nodes};
}

SpanningTreeFamily::SpanningTreeFamily(int n, std::vector<std::pair<int, int>> edges)
    : n_(n), edges_(std::move(edges)) {
  if (n_ < 1) throw std::invalid_argument("spanning tree family: n must be >= 1");
  for (auto [u, w] : edges_) {
    if (u < 0 || u >= n_ || w < 0 || w >= n_) throw std::invalid_argument("spanning tree family: node out of range");
    if (u == w) throw std::invalid_argument("spanning tree family: self-loop");
  }
}

bool SpanningTreeFamily::contains(const Subset& s) const {
  if (static_cast<int>(s.size()) != n_ - 1 || s.empty()) return false;
  UnionFind uf(n_);
  int united = 0;
  for (int e : s) {
    if (e < 0 || e >= element_count()) return false;
    if (uf.unite(edges_[e].first, edges_[e].second)) ++united;
  }
  return united == n_ - 1;
}

namespace {

// Exhaustive spanning-tree search honoring conflict pairs; stops at the
// first valid tree. Include/exclude recursion over edges with a
// remaining-edges connectivity prune.
struct TreeConflictSearch {
  const SpanningTreeFamily& fam;
  const std::vector<std::vector<int>>& conflict_with;  // per edge, conflicting allowed edges
  std::optional<Clock::time_point> deadline;

  std::vector<int> allowed;
  std::vector<int> chosen;
  std::vector<char> in_tree;
  bool found = false;
  bool expired = false;
  long nodes = 0;

  bool dfs(std::size_t next, UnionFind uf, int components) {
    ++nodes;
    if (deadline && (nodes & 63) == 0 && Clock::now() >= *deadline) {
      expired = true;
      return false;
    }
    if (components == 1) {
      found = true;
      return true;
    }
    if (next >= allowed.size()) return false;
    // Not enough edges left to connect the remaining components.
    if (static_cast<int>(allowed.size() - next) < components - 1) return false;

    int e = allowed[next];
    auto [u, w] = fam.edges()[e];
    bool conflicted = false;
    for (int other : conflict_with[e])
      if (in_tree[other]) {
        conflicted = true;
        break;
      }
    if (!conflicted && uf.find(u) != uf.find(w)) {
      UnionFind uf2 = uf;
      uf2.unite(u, w);
      chosen.push_back(e);
      in_tree[e] = 1;
      if (dfs(next + 1, std::move(uf2), components - 1)) return true;
      in_tree[e] = 0;
      chosen.pop_back();
      if (expired) return false;
    }
    return dfs(next + 1, std::move(uf), components);
  }
};

}  // namespace

FeasibilityOutcome SpanningTreeFamily::feasible(const ViolationStructure& v, const FeasibilityMode& mode) const {
  if (v.m != element_count()) throw std::invalid_argument("feasibility: violation structure size mismatch");
  if (n_ < 2) return {Answer::Infeasible, {}, 0};

  std::vector<int> allowed;
  for (int e = 0; e < element_count(); ++e)
    if (!v.forbidden[e]) allowed.push_back(e);

  if (v.conflicts.empty()) {
    // Window-restricted feasibility is a connectivity test.
    UnionFind uf(n_);
    Subset witness;
    for (int e : allowed)
      if (uf.unite(edges_[e].first, edges_[e].second)) witness.push_back(e);
    if (static_cast<int>(witness.size()) == n_ - 1) return {Answer::Feasible, witness, allowed.empty() ? 0 : 1};
    return {Answer::Infeasible, {}, 1};
  }

  if (n_ > kConflictSearchNodeLimit) return {Answer::Unknown, {}, 0};

  std::vector<std::vector<int>> conflict_with(element_count());
  for (auto [i, j] : v.conflicts) {
    conflict_with[i].push_back(j);
    conflict_with[j].push_back(i);
  }

  TreeConflictSearch search{*this, conflict_with,
                            mode.kind == FeasibilityMode::Kind::FT3
                                ? std::optional<Clock::time_point>(Clock::now() + mode.budget)
                                : std::nullopt,
                            {}, {}, {}, false, false, 0};
  search.allowed = std::move(allowed);
  search.in_tree.assign(element_count(), 0);
  search.dfs(0, UnionFind(n_), n_);
  if (search.found) return {Answer::Feasible, normalized_subset(search.chosen), search.nodes};
  if (search.expired) return {Answer::Unknown, {}, search.nodes};
  return {Answer::Infeasible, {}, search.nodes};
}

}  // namespace qbop
