#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "lp_eval.hpp"
#include "qbop/commands.hpp"
#include "qbop/instance.hpp"
#include "qbop/mip_export.hpp"
#include "qbop/oracle.hpp"
#include "qbop/run_record.hpp"
#include "test_support.hpp"

using namespace qbop;
namespace fs = std::filesystem;

namespace {

fs::path temp_dir() {
  static fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "qbop-tests";
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

Instance t1_instance() { return Instance{test::t1_matrix(), test::t1_knapsack()}; }

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Extends a solution subset to the full MIP assignment.
std::map<std::string, double> mip_assignment(const CostMatrix& c, const Subset& s) {
  std::map<std::string, double> x;
  const int m = c.size();
  std::vector<char> in_s(m, 0);
  for (int i : s) in_s[i] = 1;
  for (int i = 0; i < m; ++i) x["x" + std::to_string(i + 1)] = in_s[i] ? 1 : 0;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      x["y" + std::to_string(i + 1) + "_" + std::to_string(j + 1)] = (in_s[i] && in_s[j]) ? 1 : 0;
  Evaluation e = evaluate(c, s);
  x["u"] = static_cast<double>(e.zmax);
  x["v"] = static_cast<double>(e.zmin);
  return x;
}

}  // namespace

TEST_CASE("instance JSON round-trips byte for byte") {
  Instance knap = t1_instance();
  std::string one = to_json_string(knap);
  std::string two = to_json_string(instance_from_json(one));
  CHECK(one == two);

  Instance tree{test::t1_matrix(), SpanningTreeFamily(3, {{0, 1}, {1, 2}, {0, 2}})};
  std::string t1 = to_json_string(tree);
  std::string t2 = to_json_string(instance_from_json(t1));
  CHECK(t1 == t2);
  CHECK(instance_from_json(t1).kind() == "spanning_tree");

  auto dec = make_decomposable(DecomposableInstance::Kind::Product, {1, 2, 4}, {3, 1, 2},
                               SpanningTreeFamily(3, {{0, 1}, {1, 2}, {0, 2}}));
  std::string d1 = to_json_string(dec);
  std::string d2 = to_json_string(decomposable_from_json(d1));
  CHECK(d1 == d2);
}

TEST_CASE("instance parsing rejects malformed input") {
  CHECK_THROWS_AS(instance_from_json("not json"), std::invalid_argument);
  CHECK_THROWS_AS(instance_from_json(R"({"kind":"mystery","m":1,"cost":[[0]]})"), std::invalid_argument);
  CHECK_THROWS_AS(instance_from_json(R"({"kind":"knapsack","m":2,"cost":[[0,1]],"a":[1,2],"b":1})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(instance_from_json(R"({"kind":"knapsack","m":2,"cost":[[0,1],[1,0]],"a":[1],"b":1})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      instance_from_json(R"({"kind":"spanning_tree","m":1,"n":2,"cost":[[0]],"edges":[[1,3]]})"),
      std::invalid_argument);
}

TEST_CASE("run record CSV schema") {
  CHECK(run_csv_header().rfind("schema,", 0) == 0);
  RunRecord r;
  r.instance_id = "fixture";
  r.algorithm = "bdt";
  r.mode = "ft2";
  r.omega = "d=8";
  r.objective = 3;
  r.status = "optimal";
  r.feasibility_tests = 8;
  r.iterations = 8;
  r.early_detection = false;
  r.elapsed_ms = 0.25;
  RunRecord back = run_record_from_csv_row(to_csv_row(r));
  CHECK(back.instance_id == r.instance_id);
  CHECK(back.algorithm == r.algorithm);
  CHECK(back.mode == r.mode);
  CHECK(back.omega == r.omega);
  CHECK(back.objective == r.objective);
  CHECK(back.status == r.status);
  CHECK(back.feasibility_tests == r.feasibility_tests);
  CHECK(back.iterations == r.iterations);
  CHECK(back.early_detection == r.early_detection);
  CHECK(back.elapsed_ms == doctest::Approx(r.elapsed_ms));

  RunRecord infeasible;
  infeasible.instance_id = "x";
  infeasible.algorithm = "db";
  infeasible.mode = "ft1";
  infeasible.status = "infeasible";
  RunRecord back2 = run_record_from_csv_row(to_csv_row(infeasible));
  CHECK(!back2.objective.has_value());

  CHECK_THROWS_AS(run_record_from_csv_row("bogus,row"), std::invalid_argument);
}

TEST_CASE("generate writes a reproducible instance and a summary") {
  GenerateOptions opt;
  opt.spec = {12, 30.0, 0.4, 42};
  opt.out = temp_dir() / "gen.json";
  std::ostringstream info;
  CHECK(cmd_generate(opt, info) == kExitOk);
  std::string first = slurp(opt.out);

  Instance inst = load_instance(opt.out);
  CHECK(inst.cost.min_entry() == 0);
  ValueLadder ladder(inst.cost);
  std::string summary = info.str();
  CHECK(summary.find("m=12") != std::string::npos);
  CHECK(summary.find("p=" + std::to_string(ladder.size())) != std::string::npos);
  CHECK(summary.find("delta=" + std::to_string(inst.cost.max_entry())) != std::string::npos);

  CHECK(cmd_generate(opt, info) == kExitOk);
  CHECK(slurp(opt.out) == first);
}

TEST_CASE("solve command reports the fixture optimum") {
  fs::path inst_path = temp_dir() / "t1.json";
  save_instance(t1_instance(), inst_path);

  SolveOptions opt;
  opt.instance = inst_path;
  opt.algorithm = "bdt";
  std::ostringstream out, err;
  CHECK(cmd_solve(opt, out, err) == kExitOk);
  auto j = nlohmann::json::parse(out.str());
  CHECK(j["objective"] == 3);
  CHECK(j["status"] == "optimal");
  CHECK(j["solution"].size() == 2);

  SUBCASE("early detection flag lands in the record") {
    SolveOptions ed = opt;
    ed.algorithm = "ib1";
    ed.omega = "exact";
    std::ostringstream out2;
    CHECK(cmd_solve(ed, out2, err) == kExitOk);
    auto j2 = nlohmann::json::parse(out2.str());
    CHECK(j2["objective"] == 3);
    CHECK(j2["omega"] == "exact");
  }

  SUBCASE("two runs are identical in objective and counters") {
    std::ostringstream again;
    CHECK(cmd_solve(opt, again, err) == kExitOk);
    auto a = nlohmann::json::parse(out.str());
    auto b = nlohmann::json::parse(again.str());
    CHECK(a["objective"] == b["objective"]);
    CHECK(a["feasibility_tests"] == b["feasibility_tests"]);
    CHECK(a["iterations"] == b["iterations"]);
  }

  SUBCASE("csv append") {
    fs::path csv = temp_dir() / "solve.csv";
    fs::remove(csv);
    SolveOptions with_csv = opt;
    with_csv.csv_out = csv;
    std::ostringstream out3;
    CHECK(cmd_solve(with_csv, out3, err) == kExitOk);
    CHECK(cmd_solve(with_csv, out3, err) == kExitOk);
    std::ifstream in(csv);
    std::string line;
    std::getline(in, line);
    CHECK(line == run_csv_header());
    int rows = 0;
    while (std::getline(in, line)) {
      RunRecord r = run_record_from_csv_row(line);
      CHECK(r.objective == 3);
      ++rows;
    }
    CHECK(rows == 2);
  }
}

TEST_CASE("solve command surfaces infeasibility and bad input") {
  fs::path inst_path = temp_dir() / "infeasible.json";
  save_instance(Instance{test::t1_matrix(), KnapsackFamily({4, 5, 6}, 100)}, inst_path);
  SolveOptions opt;
  opt.instance = inst_path;
  std::ostringstream out, err;
  CHECK(cmd_solve(opt, out, err) == kExitInfeasible);

  SolveOptions bad = opt;
  bad.algorithm = "nope";
  CHECK_THROWS_AS(cmd_solve(bad, out, err), std::invalid_argument);

  // Kind mismatch: decomposable solver on a knapsack instance.
  SolveOptions mismatch = opt;
  mismatch.algorithm = "sum";
  CHECK_THROWS_AS(cmd_solve(mismatch, out, err), std::invalid_argument);
}

TEST_CASE("solve dispatches decomposable instances") {
  auto dec = make_decomposable(DecomposableInstance::Kind::Sum, {1, 2, 4}, {3, 1, 2},
                               SpanningTreeFamily(3, {{0, 1}, {1, 2}, {0, 2}}));
  fs::path p = temp_dir() / "sum.json";
  std::ofstream(p) << to_json_string(dec);
  SolveOptions opt;
  opt.instance = p;
  opt.algorithm = "sum";
  std::ostringstream out, err;
  CHECK(cmd_solve(opt, out, err) == kExitOk);
  CHECK(nlohmann::json::parse(out.str())["objective"] == 3);

  opt.algorithm = "bdt";
  CHECK_THROWS_AS(cmd_solve(opt, out, err), std::invalid_argument);
}

TEST_CASE("cli binary exit codes") {
  fs::path inst_path = temp_dir() / "t1-bin.json";
  save_instance(t1_instance(), inst_path);
  fs::path bad_path = temp_dir() / "bad.json";
  std::ofstream(bad_path) << "{";

  std::string cli = QBOP_CLI_PATH;
  auto run = [&](const std::string& args) {
    int raw = std::system((cli + " " + args + " >/dev/null 2>&1").c_str());
    return WEXITSTATUS(raw);
  };
  CHECK(run("solve " + inst_path.string()) == kExitOk);
  CHECK(run("solve " + bad_path.string()) == kExitBadInput);

  fs::path infeasible = temp_dir() / "infeasible-bin.json";
  save_instance(Instance{test::t1_matrix(), KnapsackFamily({4, 5, 6}, 100)}, infeasible);
  CHECK(run("solve " + infeasible.string()) == kExitInfeasible);
}

TEST_CASE("bench produces the full grid") {
  BenchOptions opt;
  opt.m = {8};
  opt.sigma = {20.0};
  opt.s = {0.1, 0.3, 0.5};
  opt.seeds = 4;
  opt.algorithms = {"bdt", "ib1"};
  opt.out_csv = temp_dir() / "bench.csv";
  fs::remove(opt.out_csv);
  opt.summary_csv = temp_dir() / "bench-summary.csv";
  std::ostringstream info, err;
  CHECK(cmd_bench(opt, info, err) == kExitOk);

  std::ifstream in(opt.out_csv);
  std::string line;
  std::getline(in, line);
  CHECK(line == run_csv_header());
  int rows = 0;
  while (std::getline(in, line)) {
    run_record_from_csv_row(line);  // throws on schema break
    ++rows;
  }
  CHECK(rows == 3 * 4 * 2);
  CHECK(info.str().find("mean_tests=") != std::string::npos);
}

TEST_CASE("LP export matches the formulation on the fixture") {
  CostMatrix c = test::t1_matrix();
  KnapsackFamily fam = test::t1_knapsack();
  std::string text = export_mip_lp(c, fam);
  lp_eval::Model model = lp_eval::parse(text);

  // 3 x plus 9 y variables, bounds 0 <= u,v <= 8.
  CHECK(model.binaries.size() == 12);
  REQUIRE(model.bounds.size() == 2);
  CHECK(model.bounds[0].hi == 8);
  CHECK(model.bounds[1].hi == 8);

  auto x = mip_assignment(c, {0, 2});  // oracle optimum {1,3}
  for (const auto& row : model.rows) CHECK_MESSAGE(lp_eval::row_satisfied(row, x), "row ", row.name);
  CHECK(lp_eval::value_of(model.objective, x) == doctest::Approx(3));
}

TEST_CASE("LP rows hold for every oracle-feasible subset") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    int m = 2 + static_cast<int>(seed % 6);
    CostMatrix c = test::random_matrix(m, 25, seed);
    SplitMix64 rng(seed * 3);
    std::vector<Cost> a(m);
    Cost total = 0;
    for (auto& w : a) {
      w = static_cast<Cost>(rng.next_in(0, 10));
      total += w;
    }
    KnapsackFamily fam(a, static_cast<Cost>(rng.next_in(0, static_cast<std::uint64_t>(total))));
    lp_eval::Model model = lp_eval::parse(export_mip_lp(c, fam));
    for_each_feasible(fam, [&](const Subset& s) {
      auto x = mip_assignment(c, s);
      for (const auto& row : model.rows) CHECK(lp_eval::row_satisfied(row, x));
      CHECK(lp_eval::value_of(model.objective, x) == doctest::Approx(static_cast<double>(evaluate(c, s).z)));
    });
  }
}

TEST_CASE("single-element LP is feasible exactly when the weight covers the demand") {
  CostMatrix c(1, {5});
  std::string text = export_mip_lp(c, KnapsackFamily({7}, 6));
  lp_eval::Model model = lp_eval::parse(text);
  // One y variable; the assignment x1=1 satisfies the demand row.
  int y_count = 0;
  for (const auto& v : model.binaries)
    if (v[0] == 'y') ++y_count;
  CHECK(y_count == 1);
  auto x = mip_assignment(c, {0});
  for (const auto& row : model.rows) CHECK(lp_eval::row_satisfied(row, x));

  lp_eval::Model short_model = lp_eval::parse(export_mip_lp(c, KnapsackFamily({7}, 8)));
  bool demand_holds = true;
  for (const auto& row : short_model.rows)
    if (row.name == "demand") demand_holds = lp_eval::row_satisfied(row, x);
  CHECK(!demand_holds);
}

TEST_CASE("export-mip command validates the instance kind") {
  fs::path knap = temp_dir() / "mip-knap.json";
  save_instance(t1_instance(), knap);
  ExportMipOptions opt;
  opt.instance = knap;
  opt.out = temp_dir() / "t1.lp";
  std::ostringstream err;
  CHECK(cmd_export_mip(opt, err) == kExitOk);
  CHECK(slurp(opt.out).find("Minimize") != std::string::npos);

  fs::path tree = temp_dir() / "mip-tree.json";
  save_instance(Instance{test::t1_matrix(), SpanningTreeFamily(3, {{0, 1}, {1, 2}, {0, 2}})}, tree);
  ExportMipOptions bad;
  bad.instance = tree;
  bad.out = temp_dir() / "bad.lp";
  CHECK(cmd_export_mip(bad, err) == kExitBadInput);
}

TEST_CASE("mode and omega parsing") {
  CHECK(parse_mode("ft1").kind == FeasibilityMode::Kind::FT1);
  CHECK(parse_mode("ft3=25").budget.count() == 25);
  CHECK_THROWS_AS(parse_mode("warp"), std::invalid_argument);
  CHECK(parse_omega("off").enabled == false);
  CHECK(parse_omega("exact").relaxation == 1);
  CHECK(parse_omega("d=8").relaxation == 8);
  CHECK_THROWS_AS(parse_omega("sometimes"), std::invalid_argument);
}
