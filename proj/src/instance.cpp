#include "qbop/instance.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace qbop {

namespace {

using nlohmann::json;

json cost_to_json(const CostMatrix& c) {
  json rows = json::array();
  for (int i = 0; i < c.size(); ++i) {
    json row = json::array();
    for (int j = 0; j < c.size(); ++j) row.push_back(c.at(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

CostMatrix cost_from_json(const json& rows, int m) {
  if (!rows.is_array() || static_cast<int>(rows.size()) != m)
    throw std::invalid_argument("instance: cost must be an m x m array");
  std::vector<Cost> entries;
  entries.reserve(static_cast<std::size_t>(m) * m);
  for (const auto& row : rows) {
    if (!row.is_array() || static_cast<int>(row.size()) != m)
      throw std::invalid_argument("instance: cost must be an m x m array");
    for (const auto& v : row) entries.push_back(v.get<Cost>());
  }
  return CostMatrix(m, std::move(entries));
}

// Edges are serialized 1-based, matching the element indexing in reports.
json edges_to_json(const std::vector<std::pair<int, int>>& edges) {
  json out = json::array();
  for (auto [u, v] : edges) out.push_back(json::array({u + 1, v + 1}));
  return out;
}

std::vector<std::pair<int, int>> edges_from_json(const json& arr, int n) {
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : arr) {
    if (!e.is_array() || e.size() != 2) throw std::invalid_argument("instance: edge must be a [u, v] pair");
    int u = e[0].get<int>(), v = e[1].get<int>();
    if (u < 1 || u > n || v < 1 || v > n) throw std::invalid_argument("instance: edge endpoint out of range");
    edges.emplace_back(u - 1, v - 1);
  }
  return edges;
}

json parse(const std::string& text) {
  json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) throw std::invalid_argument("instance: invalid JSON");
  return j;
}

}  // namespace

const Family& Instance::family_ref() const {
  return std::visit([](const auto& f) -> const Family& { return f; }, family);
}

std::string Instance::kind() const {
  return std::holds_alternative<KnapsackFamily>(family) ? "knapsack" : "spanning_tree";
}

std::string to_json_string(const Instance& inst) {
  json j;
  j["kind"] = inst.kind();
  j["m"] = inst.cost.size();
  j["cost"] = cost_to_json(inst.cost);
  if (const auto* k = std::get_if<KnapsackFamily>(&inst.family)) {
    j["a"] = k->weights();
    j["b"] = k->demand();
  } else {
    const auto& t = std::get<SpanningTreeFamily>(inst.family);
    j["n"] = t.node_count();
    j["edges"] = edges_to_json(t.edges());
  }
  return j.dump(1);
}

Instance instance_from_json(const std::string& text) {
  json j = parse(text);
  const std::string kind = j.value("kind", "");
  const int m = j.value("m", -1);
  if (m < 1) throw std::invalid_argument("instance: missing or invalid m");
  CostMatrix cost = cost_from_json(j.at("cost"), m);
  if (kind == "knapsack") {
    std::vector<Cost> a = j.at("a").get<std::vector<Cost>>();
    if (static_cast<int>(a.size()) != m) throw std::invalid_argument("instance: weight vector size mismatch");
    return Instance{std::move(cost), KnapsackFamily(std::move(a), j.at("b").get<Cost>())};
  }
  if (kind == "spanning_tree") {
    const int n = j.value("n", -1);
    if (n < 1) throw std::invalid_argument("instance: missing or invalid n");
    auto edges = edges_from_json(j.at("edges"), n);
    if (static_cast<int>(edges.size()) != m)
      throw std::invalid_argument("instance: edge count must equal m");
    return Instance{std::move(cost), SpanningTreeFamily(n, std::move(edges))};
  }
  throw std::invalid_argument("instance: unknown kind '" + kind + "'");
}

std::string to_json_string(const DecomposableInstance& inst) {
  json j;
  j["kind"] = inst.kind == DecomposableInstance::Kind::Sum ? "sum" : "product";
  j["a"] = inst.a;
  j["b"] = inst.b;
  j["graph"]["n"] = inst.family.node_count();
  j["graph"]["edges"] = edges_to_json(inst.family.edges());
  return j.dump(1);
}

DecomposableInstance decomposable_from_json(const std::string& text) {
  json j = parse(text);
  const std::string kind = j.value("kind", "");
  if (kind != "sum" && kind != "product")
    throw std::invalid_argument("instance: unknown decomposable kind '" + kind + "'");
  const auto& g = j.at("graph");
  const int n = g.value("n", -1);
  if (n < 1) throw std::invalid_argument("instance: missing or invalid graph.n");
  auto edges = edges_from_json(g.at("edges"), n);
  return make_decomposable(
      kind == "sum" ? DecomposableInstance::Kind::Sum : DecomposableInstance::Kind::Product,
      j.at("a").get<std::vector<Cost>>(), j.at("b").get<std::vector<Cost>>(),
      SpanningTreeFamily(n, std::move(edges)));
}

AnyInstance any_instance_from_json(const std::string& text) {
  json j = parse(text);
  const std::string kind = j.value("kind", "");
  if (kind == "knapsack" || kind == "spanning_tree") return instance_from_json(text);
  if (kind == "sum" || kind == "product") return decomposable_from_json(text);
  throw std::invalid_argument("instance: unknown kind '" + kind + "'");
}

AnyInstance load_any_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open instance file: " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return any_instance_from_json(buf.str());
}

Instance load_instance(const std::filesystem::path& path) {
  AnyInstance any = load_any_instance(path);
  if (auto* inst = std::get_if<Instance>(&any)) return std::move(*inst);
  throw std::invalid_argument("instance: expected a knapsack or spanning_tree instance");
}

void save_instance(const Instance& inst, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write instance file: " + path.string());
  out << to_json_string(inst) << '\n';
}

}  // namespace qbop
