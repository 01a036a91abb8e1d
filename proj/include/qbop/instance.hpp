#pragma once

#include "qbop/core.hpp"
#include "qbop/families.hpp"
#include "qbop/special.hpp"

#include <filesystem>
#include <string>
#include <variant>

namespace qbop {

/// A cost matrix together with its feasible family. Serialized as JSON with
/// a "kind" discriminator; the canonical form round-trips byte-exactly.
struct Instance {
  CostMatrix cost;
  std::variant<KnapsackFamily, SpanningTreeFamily> family;

  const Family& family_ref() const;
  std::string kind() const;  // "knapsack" | "spanning_tree"
};

std::string to_json_string(const Instance& inst);
Instance instance_from_json(const std::string& text);

std::string to_json_string(const DecomposableInstance& inst);
DecomposableInstance decomposable_from_json(const std::string& text);

/// Any of the on-disk instance kinds, discriminated by the "kind" field.
using AnyInstance = std::variant<Instance, DecomposableInstance>;

AnyInstance any_instance_from_json(const std::string& text);
AnyInstance load_any_instance(const std::filesystem::path& path);

Instance load_instance(const std::filesystem::path& path);
void save_instance(const Instance& inst, const std::filesystem::path& path);

}  // namespace qbop
