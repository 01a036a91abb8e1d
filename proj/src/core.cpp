#include "qbop/core.hpp"

#include <algorithm>
#include <stdexcept>

#include "qbop/kernels.hpp"

namespace qbop {

CostMatrix::CostMatrix(int m, std::vector<Cost> entries) : m_(m), entries_(std::move(entries)) {
  if (m_ < 1) throw std::invalid_argument("cost matrix: m must be >= 1");
  if (entries_.size() != static_cast<std::size_t>(m_) * m_)
    throw std::invalid_argument("cost matrix: expected m*m entries");
  for (Cost c : entries_)
    if (c < 0) throw std::invalid_argument("cost matrix: entries must be non-negative");
}

CostMatrix CostMatrix::from_rows(const std::vector<std::vector<Cost>>& rows) {
  const int m = static_cast<int>(rows.size());
  std::vector<Cost> flat;
  flat.reserve(static_cast<std::size_t>(m) * m);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != m)
      throw std::invalid_argument("cost matrix: rows must form a square matrix");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return CostMatrix(m, std::move(flat));
}

Cost CostMatrix::min_entry() const { return *std::min_element(entries_.begin(), entries_.end()); }

Cost CostMatrix::max_entry() const { return *std::max_element(entries_.begin(), entries_.end()); }

ValueLadder::ValueLadder(const CostMatrix& c) {
  values_.assign(c.entries().begin(), c.entries().end());
  std::sort(values_.begin(), values_.end());
  values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
}

ValueLadder::ValueLadder(std::vector<Cost> ascending_distinct) : values_(std::move(ascending_distinct)) {
  for (std::size_t k = 1; k < values_.size(); ++k)
    if (values_[k - 1] >= values_[k])
      throw std::invalid_argument("value ladder: values must be strictly increasing");
}

Cost ValueLadder::value(int rank) const {
  if (rank < 1 || rank > size()) throw std::out_of_range("value ladder: rank out of range");
  return values_[static_cast<std::size_t>(rank) - 1];
}

int ValueLadder::rank(Cost v) const {
  auto it = std::lower_bound(values_.begin(), values_.end(), v);
  if (it == values_.end() || *it != v) throw std::invalid_argument("value ladder: value not present");
  return static_cast<int>(it - values_.begin()) + 1;
}

int ValueLadder::first_above(Cost v) const {
  auto it = std::upper_bound(values_.begin(), values_.end(), v);
  return static_cast<int>(it - values_.begin()) + 1;
}

int ValueLadder::last_below(Cost v) const {
  auto it = std::lower_bound(values_.begin(), values_.end(), v);
  return static_cast<int>(it - values_.begin());
}

int ViolationStructure::forbidden_count() const {
  int n = 0;
  for (char f : forbidden) n += (f != 0);
  return n;
}

bool ViolationStructure::all_forbidden() const { return forbidden_count() == m; }

const char* to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Optimal: return "optimal";
    case SolveStatus::Heuristic: return "heuristic";
    case SolveStatus::Infeasible: return "infeasible";
  }
  return "unknown";
}

Subset normalized_subset(Subset s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

void validate_subset(const Subset& s, int m) {
  if (s.empty()) throw std::invalid_argument("subset: must be non-empty");
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (s[k] < 0 || s[k] >= m) throw std::invalid_argument("subset: index out of range");
    if (k > 0 && s[k] <= s[k - 1]) throw std::invalid_argument("subset: indices must be sorted and unique");
  }
}

Evaluation evaluate(const CostMatrix& c, const Subset& s) {
  validate_subset(s, c.size());
  auto [zmax, zmin] = kernels::subset_extrema(c, s);
  return {zmax, zmin, zmax - zmin};
}

ValueLadder build_ladder(const CostMatrix& c) { return ValueLadder(c); }

ViolationStructure violation_structure(const CostMatrix& c, const ThresholdWindow& w) {
  if (w.alpha > w.beta) throw std::invalid_argument("threshold window: alpha must be <= beta");
  return kernels::window_scan(c, w.alpha, w.beta);
}

}  // namespace qbop
