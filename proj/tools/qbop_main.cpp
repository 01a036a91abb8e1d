#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qbop/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"qbop: solvers for range-minimizing subset selection with pairwise costs"};
  app.require_subcommand(1);

  qbop::GenerateOptions gen;
  std::string gen_out;
  auto* generate = app.add_subcommand("generate", "generate a random knapsack instance");
  generate->add_option("-m,--m", gen.spec.m, "element count")->required();
  generate->add_option("--sigma", gen.spec.sigma, "cost standard deviation")->required();
  generate->add_option("--s", gen.spec.s, "demand density in [0,1]")->required();
  generate->add_option("--seed", gen.spec.seed, "random seed")->default_val(1);
  generate->add_option("--out", gen_out, "output instance path")->required();

  qbop::SolveOptions solve;
  std::string solve_instance, solve_csv;
  auto* solve_cmd = app.add_subcommand("solve", "solve an instance file");
  solve_cmd->add_option("instance", solve_instance, "instance JSON path")->required();
  solve_cmd->add_option("-a,--algorithm", solve.algorithm, "bdt|tdt|ib1|ib2|db|sum|product")
      ->default_val("bdt");
  solve_cmd->add_option("--mode", solve.mode, "ft1|ft2|ft3=<ms>")->default_val("ft2");
  solve_cmd->add_option("--omega", solve.omega, "off|exact|d=<k>")->default_val("off");
  solve_cmd->add_option("--csv", solve_csv, "append the run record to this CSV");

  qbop::BenchOptions bench;
  std::string bench_out, bench_summary;
  auto* bench_cmd = app.add_subcommand("bench", "run a generator/algorithm grid");
  bench_cmd->add_option("--m", bench.m, "element counts")->delimiter(',');
  bench_cmd->add_option("--sigma", bench.sigma, "sigma values")->delimiter(',');
  bench_cmd->add_option("--s", bench.s, "density values")->delimiter(',');
  bench_cmd->add_option("--seeds", bench.seeds, "seeds per cell")->default_val(1);
  bench_cmd->add_option("--seed0", bench.seed0, "first seed")->default_val(1);
  bench_cmd->add_option("--algorithms", bench.algorithms, "algorithms to run")->delimiter(',');
  bench_cmd->add_option("--mode", bench.mode, "ft1|ft2|ft3=<ms>")->default_val("ft2");
  bench_cmd->add_option("--omega", bench.omega, "off|exact|d=<k>")->default_val("off");
  bench_cmd->add_option("--out", bench_out, "run records CSV")->required();
  bench_cmd->add_option("--summary-out", bench_summary, "per-cell means CSV");

  qbop::ExportMipOptions mip;
  std::string mip_instance, mip_out;
  auto* mip_cmd = app.add_subcommand("export-mip", "write the LP-format integer program");
  mip_cmd->add_option("instance", mip_instance, "knapsack instance JSON path")->required();
  mip_cmd->add_option("--out", mip_out, "output LP path")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*generate) {
      gen.out = gen_out;
      return qbop::cmd_generate(gen, std::cout);
    }
    if (*solve_cmd) {
      solve.instance = solve_instance;
      if (!solve_csv.empty()) solve.csv_out = solve_csv;
      return qbop::cmd_solve(solve, std::cout, std::cerr);
    }
    if (*bench_cmd) {
      bench.out_csv = bench_out;
      if (!bench_summary.empty()) bench.summary_csv = bench_summary;
      return qbop::cmd_bench(bench, std::cout, std::cerr);
    }
    if (*mip_cmd) {
      mip.instance = mip_instance;
      mip.out = mip_out;
      return qbop::cmd_export_mip(mip, std::cerr);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return qbop::kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return qbop::kExitBadInput;
}
