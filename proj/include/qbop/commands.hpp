#pragma once

#include "qbop/core.hpp"
#include "qbop/families.hpp"
#include "qbop/generator.hpp"
#include "qbop/run_record.hpp"
#include "qbop/solvers.hpp"

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace qbop {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInfeasible = 2;
inline constexpr int kExitBadInput = 3;

bool log_enabled();  // QBOP_LOG >= 1

/// "ft1" | "ft2" | "ft3=<ms>"
FeasibilityMode parse_mode(const std::string& text);

/// "off" | "exact" | "d=<k>"
EarlyDetectionConfig parse_omega(const std::string& text);

struct GenerateOptions {
  GeneratorSpec spec;
  std::filesystem::path out;
};

int cmd_generate(const GenerateOptions& opt, std::ostream& info);

struct SolveOptions {
  std::filesystem::path instance;
  std::string algorithm = "bdt";  // bdt|tdt|ib1|ib2|db, or sum|product for decomposable files
  std::string mode = "ft2";
  std::string omega = "off";
  std::optional<std::filesystem::path> csv_out;
};

int cmd_solve(const SolveOptions& opt, std::ostream& out, std::ostream& err);

struct BenchOptions {
  std::vector<int> m = {20};
  std::vector<double> sigma = {100.0};
  std::vector<double> s = {0.1};
  int seeds = 1;
  std::uint64_t seed0 = 1;
  std::vector<std::string> algorithms = {"bdt", "ib1"};
  std::string mode = "ft2";
  std::string omega = "off";
  std::filesystem::path out_csv;
  std::optional<std::filesystem::path> summary_csv;
};

int cmd_bench(const BenchOptions& opt, std::ostream& info, std::ostream& err);

struct ExportMipOptions {
  std::filesystem::path instance;
  std::filesystem::path out;
};

int cmd_export_mip(const ExportMipOptions& opt, std::ostream& err);

}  // namespace qbop
