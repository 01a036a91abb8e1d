#include "qbop/run_record.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

#include <json.hpp>

namespace qbop {

std::string run_csv_header() {
  return "schema,instance,algorithm,mode,omega,objective,status,feasibility_tests,iterations,"
         "early_detection,elapsed_ms";
}

std::string to_csv_row(const RunRecord& r) {
  std::ostringstream out;
  out << kRunCsvSchema << ',' << r.instance_id << ',' << r.algorithm << ',' << r.mode << ','
      << r.omega << ',';
  if (r.objective) out << *r.objective;
  out << ',' << r.status << ',' << r.feasibility_tests << ',' << r.iterations << ','
      << (r.early_detection ? 1 : 0) << ',' << r.elapsed_ms;
  return out.str();
}

RunRecord run_record_from_csv_row(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) fields.push_back(field);
  if (line.size() && line.back() == ',') fields.push_back("");
  if (fields.size() != 11) throw std::invalid_argument("run record: expected 11 CSV fields");
  if (fields[0] != kRunCsvSchema) throw std::invalid_argument("run record: unknown schema " + fields[0]);
  RunRecord r;
  r.instance_id = fields[1];
  r.algorithm = fields[2];
  r.mode = fields[3];
  r.omega = fields[4];
  if (!fields[5].empty()) r.objective = std::stoll(fields[5]);
  r.status = fields[6];
  r.feasibility_tests = std::stol(fields[7]);
  r.iterations = std::stol(fields[8]);
  r.early_detection = fields[9] == "1";
  r.elapsed_ms = std::stod(fields[10]);
  return r;
}

std::string to_json_string(const RunRecord& r, const std::optional<Subset>& solution) {
  nlohmann::json j;
  j["schema"] = kRunCsvSchema;
  j["instance"] = r.instance_id;
  j["algorithm"] = r.algorithm;
  j["mode"] = r.mode;
  j["omega"] = r.omega;
  if (r.objective)
    j["objective"] = *r.objective;
  else
    j["objective"] = nullptr;
  j["status"] = r.status;
  j["feasibility_tests"] = r.feasibility_tests;
  j["iterations"] = r.iterations;
  j["early_detection"] = r.early_detection;
  j["elapsed_ms"] = r.elapsed_ms;
  if (solution) {
    std::vector<int> one_based;
    for (int i : *solution) one_based.push_back(i + 1);
    j["solution"] = one_based;
  } else {
    j["solution"] = nullptr;
  }
  return j.dump();
}

}  // namespace qbop
