#pragma once

#include "qbop/core.hpp"

#include <optional>
#include <string>

namespace qbop {

inline constexpr const char* kRunCsvSchema = "qbop-run-1";

/// One solver run, as written to the bench CSV and to solve's JSON output.
struct RunRecord {
  std::string instance_id;
  std::string algorithm;
  std::string mode;
  std::string omega = "off";
  std::optional<Cost> objective;
  std::string status;
  long feasibility_tests = 0;
  long iterations = 0;
  bool early_detection = false;
  double elapsed_ms = 0.0;
};

std::string run_csv_header();
std::string to_csv_row(const RunRecord& r);
RunRecord run_record_from_csv_row(const std::string& line);

std::string to_json_string(const RunRecord& r, const std::optional<Subset>& solution);

}  // namespace qbop
