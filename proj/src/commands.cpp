#include "qbop/commands.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "qbop/instance.hpp"
#include "qbop/mip_export.hpp"
#include "qbop/special.hpp"

namespace qbop {

namespace {

std::string format_double(double v) {
  std::ostringstream out;
  out << v;
  return out.str();
}

RunRecord record_from(const SolveResult& r, std::string instance_id, std::string algorithm,
                      std::string mode, std::string omega) {
  RunRecord rec;
  rec.instance_id = std::move(instance_id);
  rec.algorithm = std::move(algorithm);
  rec.mode = std::move(mode);
  rec.omega = std::move(omega);
  if (r.solution) rec.objective = r.objective;
  rec.status = to_string(r.status);
  rec.feasibility_tests = r.stats.feasibility_tests;
  rec.iterations = r.stats.iterations;
  rec.early_detection = r.stats.early_detection;
  rec.elapsed_ms = r.stats.elapsed_ms;
  return rec;
}

void append_csv(const std::filesystem::path& path, const std::vector<RunRecord>& records) {
  const bool fresh = !std::filesystem::exists(path) || std::filesystem::file_size(path) == 0;
  std::ofstream out(path, std::ios::app);
  if (!out) throw std::runtime_error("cannot open CSV for append: " + path.string());
  if (fresh) out << run_csv_header() << '\n';
  for (const auto& r : records) out << to_csv_row(r) << '\n';
}

SolveResult dispatch_solve(const AnyInstance& any, const std::string& algorithm,
                           const FeasibilityMode& mode, const EarlyDetectionConfig& ed) {
  if (const auto* inst = std::get_if<Instance>(&any)) {
    auto algo = parse_algorithm(algorithm);
    if (!algo)
      throw std::invalid_argument("algorithm '" + algorithm + "' does not apply to a " +
                                  inst->kind() + " instance");
    return solve_with(*algo, inst->cost, inst->family_ref(), mode, ed);
  }
  const auto& dec = std::get<DecomposableInstance>(any);
  const bool is_sum = dec.kind == DecomposableInstance::Kind::Sum;
  if (algorithm == "sum" && is_sum) return solve_qbop_sum(dec);
  if (algorithm == "product" && !is_sum) return solve_qbop_product(dec);
  throw std::invalid_argument("algorithm '" + algorithm + "' does not apply to a " +
                              std::string(is_sum ? "sum" : "product") + " instance");
}

}  // namespace

bool log_enabled() {
  const char* env = std::getenv("QBOP_LOG");
  return env != nullptr && env[0] != '\0' && env[0] != '0';
}

FeasibilityMode parse_mode(const std::string& text) {
  if (text == "ft1") return FeasibilityMode::ft1();
  if (text == "ft2") return FeasibilityMode::ft2();
  if (text.rfind("ft3=", 0) == 0) {
    long ms = std::stol(text.substr(4));
    return FeasibilityMode::ft3(std::chrono::milliseconds(ms));
  }
  throw std::invalid_argument("mode must be ft1, ft2 or ft3=<ms>");
}

EarlyDetectionConfig parse_omega(const std::string& text) {
  if (text == "off") return EarlyDetectionConfig::off();
  if (text == "exact") return EarlyDetectionConfig::exact();
  if (text.rfind("d=", 0) == 0) return EarlyDetectionConfig::relaxed(std::stoi(text.substr(2)));
  throw std::invalid_argument("omega must be off, exact or d=<k>");
}

int cmd_generate(const GenerateOptions& opt, std::ostream& info) {
  Instance inst = generate_qbalkp(opt.spec);
  save_instance(inst, opt.out);
  ValueLadder ladder(inst.cost);
  // Delta here is the cost spread max - min, which equals the max entry
  // because the generator shifts the minimum to zero.
  info << "m=" << inst.cost.size() << " p=" << ladder.size()
       << " delta=" << inst.cost.max_entry() - inst.cost.min_entry()
       << " b=" << std::get<KnapsackFamily>(inst.family).demand() << " out=" << opt.out.string()
       << '\n';
  return kExitOk;
}

int cmd_solve(const SolveOptions& opt, std::ostream& out, std::ostream& err) {
  AnyInstance any = load_any_instance(opt.instance);
  FeasibilityMode mode = parse_mode(opt.mode);
  EarlyDetectionConfig ed = parse_omega(opt.omega);
  const bool decomposable = std::holds_alternative<DecomposableInstance>(any);
  if (decomposable && opt.omega != "off") {
    err << "note: --omega has no effect on decomposable instances\n";
  }
  if (opt.algorithm == "db" && ed.enabled) {
    err << "note: db has no early-detection hook; --omega ignored\n";
    ed = EarlyDetectionConfig::off();
  }

  SolveResult result = dispatch_solve(any, opt.algorithm, mode, ed);
  RunRecord rec = record_from(result, opt.instance.string(), opt.algorithm, opt.mode, opt.omega);
  out << to_json_string(rec, result.solution) << '\n';
  if (opt.csv_out) append_csv(*opt.csv_out, {rec});
  return result.status == SolveStatus::Infeasible ? kExitInfeasible : kExitOk;
}

int cmd_bench(const BenchOptions& opt, std::ostream& info, std::ostream& err) {
  FeasibilityMode mode = parse_mode(opt.mode);
  EarlyDetectionConfig ed = parse_omega(opt.omega);

  struct Cell {
    GeneratorSpec spec;
    std::string algorithm;
  };
  std::vector<Cell> cells;
  for (int m : opt.m)
    for (double sigma : opt.sigma)
      for (double s : opt.s)
        for (int k = 0; k < opt.seeds; ++k)
          for (const auto& algo : opt.algorithms)
            cells.push_back({GeneratorSpec{m, sigma, s, opt.seed0 + static_cast<std::uint64_t>(k)}, algo});

  std::vector<RunRecord> records(cells.size());
  // Cells are independent; one worker pool, records land in cell order.
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (std::size_t idx = 0; idx < cells.size(); ++idx) {
    const Cell& cell = cells[idx];
    std::ostringstream id;
    id << "gen-m" << cell.spec.m << "-sig" << cell.spec.sigma << "-s" << cell.spec.s << "-seed"
       << cell.spec.seed;
    try {
      Instance inst = generate_qbalkp(cell.spec);
      auto algo = parse_algorithm(cell.algorithm);
      if (!algo) throw std::invalid_argument("unknown algorithm " + cell.algorithm);
      EarlyDetectionConfig cell_ed = cell.algorithm == "db" ? EarlyDetectionConfig::off() : ed;
      SolveResult r = solve_with(*algo, inst.cost, inst.family_ref(), mode, cell_ed);
      records[idx] = record_from(r, id.str(), cell.algorithm, opt.mode, opt.omega);
    } catch (const std::exception& e) {
      RunRecord rec;
      rec.instance_id = id.str();
      rec.algorithm = cell.algorithm;
      rec.mode = opt.mode;
      rec.omega = opt.omega;
      rec.status = "error";
      records[idx] = rec;
#ifdef _OPENMP
#pragma omp critical
#endif
      err << "bench cell " << id.str() << " failed: " << e.what() << '\n';
    }
    if (log_enabled()) {
#ifdef _OPENMP
#pragma omp critical
#endif
      std::cerr << "done " << records[idx].instance_id << " " << records[idx].algorithm << '\n';
    }
  }

  append_csv(opt.out_csv, records);

  // Per-cell means of the two headline quantities.
  struct Agg {
    double tests = 0, time = 0;
    int n = 0;
  };
  std::map<std::string, Agg> agg;
  for (std::size_t idx = 0; idx < cells.size(); ++idx) {
    if (records[idx].status == "error") continue;
    std::ostringstream key;
    key << "m=" << cells[idx].spec.m << " sigma=" << cells[idx].spec.sigma << " s=" << cells[idx].spec.s
        << " algo=" << cells[idx].algorithm;
    Agg& a = agg[key.str()];
    a.tests += static_cast<double>(records[idx].feasibility_tests);
    a.time += records[idx].elapsed_ms;
    ++a.n;
  }
  std::optional<std::ofstream> summary;
  if (opt.summary_csv) {
    summary.emplace(*opt.summary_csv);
    *summary << "cell,mean_feasibility_tests,mean_elapsed_ms,runs\n";
  }
  for (const auto& [key, a] : agg) {
    info << key << "  mean_tests=" << format_double(a.tests / a.n)
         << "  mean_ms=" << format_double(a.time / a.n) << "  runs=" << a.n << '\n';
    if (summary) *summary << key << ',' << a.tests / a.n << ',' << a.time / a.n << ',' << a.n << '\n';
  }
  return kExitOk;
}

int cmd_export_mip(const ExportMipOptions& opt, std::ostream& err) {
  AnyInstance any = load_any_instance(opt.instance);
  const auto* inst = std::get_if<Instance>(&any);
  if (!inst || inst->kind() != "knapsack") {
    err << "export-mip requires a knapsack instance\n";
    return kExitBadInput;
  }
  write_mip_lp(inst->cost, std::get<KnapsackFamily>(inst->family), opt.out);
  return kExitOk;
}

}  // namespace qbop
