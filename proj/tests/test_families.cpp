#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "qbop/oracle.hpp"
#include "test_support.hpp"

using namespace qbop;
using test::t1_knapsack;
using test::t1_matrix;

namespace {

// Exhaustive max-weight independent set for cross-checking FT1.
Cost brute_mwis(const std::vector<Cost>& a, const ViolationStructure& v) {
  const int m = static_cast<int>(a.size());
  Cost best = -1;
  for (unsigned mask = 1; mask < (1u << m); ++mask) {
    bool ok = true;
    for (int i = 0; i < m && ok; ++i)
      if ((mask >> i) & 1) ok = !v.forbidden[i];
    for (auto [i, j] : v.conflicts)
      if (((mask >> i) & 1) && ((mask >> j) & 1)) ok = false;
    if (!ok) continue;
    Cost w = 0;
    for (int i = 0; i < m; ++i)
      if ((mask >> i) & 1) w += a[i];
    best = std::max(best, w);
  }
  return best;
}

void check_witness(const Family& fam, const CostMatrix& c, Cost alpha, Cost beta, const Subset& w) {
  CHECK(fam.contains(w));
  Evaluation e = evaluate(c, w);
  CHECK(e.zmin >= alpha);
  CHECK(e.zmax <= beta);
}

}  // namespace

TEST_CASE("fixture windows") {
  CostMatrix c = t1_matrix();
  KnapsackFamily fam = t1_knapsack();

  SUBCASE("window [1,4] forbids element 1, leaves 2+3") {
    ViolationStructure v = violation_structure(c, {1, 4});
    for (auto mode : {FeasibilityMode::ft1(), FeasibilityMode::ft2()}) {
      FeasibilityOutcome out = fam.feasible(v, mode);
      REQUIRE(out.answer == Answer::Feasible);
      CHECK(out.witness == Subset{1, 2});
      check_witness(fam, c, 1, 4, out.witness);
    }
  }

  SUBCASE("window excluding everything is infeasible") {
    ViolationStructure v = violation_structure(c, {100, 200});
    CHECK(v.all_forbidden());
    CHECK(fam.feasible(v, FeasibilityMode::ft1()).answer == Answer::Infeasible);
    CHECK(fam.feasible(v, FeasibilityMode::ft2()).answer == Answer::Infeasible);
  }

  SUBCASE("window [0,3] leaves only {1,3} among heavy pairs") {
    ViolationStructure v = violation_structure(c, {0, 3});
    for (auto mode : {FeasibilityMode::ft1(), FeasibilityMode::ft2()}) {
      FeasibilityOutcome out = fam.feasible(v, mode);
      REQUIRE(out.answer == Answer::Feasible);
      CHECK(out.witness == Subset{0, 2});
      check_witness(fam, c, 0, 3, out.witness);
    }
  }
}

TEST_CASE("FT1 optimum matches exhaustive enumeration") {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    int m = 2 + static_cast<int>(seed % 15);
    CostMatrix c = test::random_matrix(m, 25, seed);
    SplitMix64 rng(seed * 101);
    std::vector<Cost> a(m);
    for (auto& w : a) w = static_cast<Cost>(rng.next_in(0, 30));
    Cost alpha = static_cast<Cost>(rng.next_in(0, 12));
    Cost beta = alpha + static_cast<Cost>(rng.next_in(0, 13));
    ViolationStructure v = violation_structure(c, {alpha, beta});

    Cost brute = brute_mwis(a, v);  // -1 when every element is forbidden
    Cost total = 0;
    for (Cost w : a) total += w;
    for (Cost demand : {Cost{0}, std::max<Cost>(brute, 0), std::max<Cost>(brute, 0) + 1, total + 5}) {
      KnapsackFamily fam(a, demand);
      FeasibilityOutcome out = fam.feasible(v, FeasibilityMode::ft1());
      bool expect = brute >= 0 && brute >= demand;
      CHECK((out.answer == Answer::Feasible) == expect);
      if (out.answer == Answer::Feasible) {
        // FT1 returns the maximizing independent set, untrimmed.
        Cost w = 0;
        for (int i : out.witness) w += a[i];
        CHECK(w == brute);
      }
    }
  }
}

TEST_CASE("FT1 and FT2 agree on feasibility across random windows") {
  int trials = 0;
  for (std::uint64_t seed = 1; trials < 500; ++seed) {
    int m = 2 + static_cast<int>(seed % 12);
    CostMatrix c = test::random_matrix(m, 30, seed * 7);
    SplitMix64 rng(seed * 13);
    std::vector<Cost> a(m);
    for (auto& w : a) w = static_cast<Cost>(rng.next_in(0, 20));
    KnapsackFamily fam(a, static_cast<Cost>(rng.next_in(0, 40)));
    Cost alpha = static_cast<Cost>(rng.next_in(0, 15));
    Cost beta = alpha + static_cast<Cost>(rng.next_in(0, 16));
    ViolationStructure v = violation_structure(c, {alpha, beta});

    FeasibilityOutcome o1 = fam.feasible(v, FeasibilityMode::ft1());
    FeasibilityOutcome o2 = fam.feasible(v, FeasibilityMode::ft2());
    CHECK(o1.answer == o2.answer);
    if (o1.answer == Answer::Feasible) {
      check_witness(fam, c, alpha, beta, o1.witness);
      check_witness(fam, c, alpha, beta, o2.witness);
    }
    ++trials;
  }
}

TEST_CASE("FT3 with a generous budget reproduces exact answers") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    int m = 2 + static_cast<int>(seed % 10);
    CostMatrix c = test::random_matrix(m, 25, seed);
    SplitMix64 rng(seed);
    std::vector<Cost> a(m);
    for (auto& w : a) w = static_cast<Cost>(rng.next_in(0, 20));
    KnapsackFamily fam(a, static_cast<Cost>(rng.next_in(0, 30)));
    ViolationStructure v = violation_structure(c, {3, 18});
    Answer exact = fam.feasible(v, FeasibilityMode::ft1()).answer;
    Answer timed = fam.feasible(v, FeasibilityMode::ft3(std::chrono::milliseconds(2000))).answer;
    CHECK(timed == exact);  // never a wrong Infeasible, and small searches finish
  }
}

TEST_CASE("FT3 budget validation") {
  CHECK_THROWS_AS(FeasibilityMode::ft3(std::chrono::milliseconds(0)), std::invalid_argument);
  CHECK_THROWS_AS(FeasibilityMode::ft3(std::chrono::milliseconds(-5)), std::invalid_argument);
}

TEST_CASE("knapsack family validation and membership") {
  CHECK_THROWS_AS(KnapsackFamily({-1, 2}, 1), std::invalid_argument);
  CHECK_THROWS_AS(KnapsackFamily({1, 2}, -1), std::invalid_argument);
  KnapsackFamily fam({4, 5, 6}, 9);
  CHECK(fam.contains({0, 1}));
  CHECK(!fam.contains({0}));
  CHECK(!fam.contains({}));
  CHECK(!fam.contains({0, 7}));
}

TEST_CASE("spanning tree feasibility") {
  SpanningTreeFamily triangle(3, {{0, 1}, {1, 2}, {0, 2}});

  SUBCASE("all edges allowed") {
    ViolationStructure v{3, {0, 0, 0}, {}};
    FeasibilityOutcome out = triangle.feasible(v, FeasibilityMode::ft2());
    REQUIRE(out.answer == Answer::Feasible);
    CHECK(out.witness.size() == 2);
    CHECK(triangle.contains(out.witness));
  }

  SUBCASE("a single allowed edge cannot span three nodes") {
    ViolationStructure v{3, {0, 1, 1}, {}};
    CHECK(triangle.feasible(v, FeasibilityMode::ft2()).answer == Answer::Infeasible);
  }

  SUBCASE("path graph has the unique witness") {
    SpanningTreeFamily path(2, {{0, 1}});
    ViolationStructure v{1, {0}, {}};
    FeasibilityOutcome out = path.feasible(v, FeasibilityMode::ft2());
    REQUIRE(out.answer == Answer::Feasible);
    CHECK(out.witness == Subset{0});
  }

  SUBCASE("conflict pair falls back to exhaustive search") {
    ViolationStructure v{3, {0, 0, 0}, {{0, 1}}};
    FeasibilityOutcome out = triangle.feasible(v, FeasibilityMode::ft1());
    REQUIRE(out.answer == Answer::Feasible);
    // {e1,e2} is conflicted; either remaining tree works.
    CHECK(!(std::find(out.witness.begin(), out.witness.end(), 0) != out.witness.end() &&
            std::find(out.witness.begin(), out.witness.end(), 1) != out.witness.end()));
    CHECK(triangle.contains(out.witness));
  }

  SUBCASE("conflicting pairs everywhere make it infeasible") {
    ViolationStructure v{3, {0, 0, 0}, {{0, 1}, {0, 2}, {1, 2}}};
    CHECK(triangle.feasible(v, FeasibilityMode::ft1()).answer == Answer::Infeasible);
  }

  SUBCASE("conflicts above the node limit report Unknown") {
    int n = 13;
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n - 1; ++u) edges.emplace_back(u, u + 1);
    edges.emplace_back(0, 2);
    SpanningTreeFamily big(n, std::move(edges));
    ViolationStructure v{big.element_count(), std::vector<char>(big.element_count(), 0), {{0, 1}}};
    CHECK(big.feasible(v, FeasibilityMode::ft2()).answer == Answer::Unknown);
  }
}

TEST_CASE("malformed graphs are rejected") {
  CHECK_THROWS_AS(SpanningTreeFamily(3, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(SpanningTreeFamily(3, {{0, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(SpanningTreeFamily(0, {}), std::invalid_argument);
}

TEST_CASE("tree membership checks shape and connectivity") {
  SpanningTreeFamily fam(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}});
  CHECK(fam.contains({0, 1, 2}));
  CHECK(fam.contains({0, 1, 3}));
  CHECK(!fam.contains({0, 1}));     // too few edges
  CHECK(!fam.contains({0, 1, 4}));  // 3-cycle on {0,1,2}, node 3 unreached
  CHECK(fam.contains({0, 3, 4}));   // star at node 0
}
