#include "qbop/kernels.hpp"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qbop::kernels {

namespace {

KernelMode g_mode = [] {
  const char* env = std::getenv("QBOP_KERNELS");
  if (env != nullptr) {
    if (std::strcmp(env, "serial") == 0) return KernelMode::Serial;
    if (std::strcmp(env, "parallel") == 0) return KernelMode::Parallel;
  }
  return KernelMode::Auto;
}();

// Below this many scanned entries the fork/join overhead dominates.
constexpr int kAutoThreshold = 96 * 96;

}  // namespace

KernelMode kernel_mode() { return g_mode; }

void set_kernel_mode(KernelMode mode) { g_mode = mode; }

bool parallel_active(int work_items) {
#ifdef _OPENMP
  switch (g_mode) {
    case KernelMode::Serial: return false;
    case KernelMode::Parallel: return true;
    case KernelMode::Auto: return work_items >= kAutoThreshold && omp_get_max_threads() > 1;
  }
  return false;
#else
  (void)work_items;
  return false;
#endif
}

PairExtrema subset_extrema_serial(const CostMatrix& c, std::span<const int> members) {
  Cost mx = c.at(members[0], members[0]);
  Cost mn = mx;
  for (int i : members) {
    for (int j : members) {
      Cost v = c.at(i, j);
      mx = std::max(mx, v);
      mn = std::min(mn, v);
    }
  }
  return {mx, mn};
}

PairExtrema subset_extrema_parallel(const CostMatrix& c, std::span<const int> members) {
  const int k = static_cast<int>(members.size());
  Cost mx = c.at(members[0], members[0]);
  Cost mn = mx;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) reduction(max : mx) reduction(min : mn)
#endif
  for (int t = 0; t < k * k; ++t) {
    Cost v = c.at(members[t / k], members[t % k]);
    mx = std::max(mx, v);
    mn = std::min(mn, v);
  }
  return {mx, mn};
}

PairExtrema subset_extrema(const CostMatrix& c, std::span<const int> members) {
  if (members.empty()) throw std::invalid_argument("subset extrema: empty subset");
  const int k = static_cast<int>(members.size());
  return parallel_active(k * k) ? subset_extrema_parallel(c, members) : subset_extrema_serial(c, members);
}

PairExtrema masked_subset_extrema(const MaskedMatrix& cm, std::span<const int> members) {
  if (members.empty()) throw std::invalid_argument("subset extrema: empty subset");
  Cost mx = cm.effective(members[0], members[0]);
  Cost mn = mx;
  for (int i : members) {
    for (int j : members) {
      Cost v = cm.effective(i, j);
      mx = std::max(mx, v);
      mn = std::min(mn, v);
    }
  }
  return {mx, mn};
}

namespace {

// Shared scan body. violates(i, j) must be a pure predicate on the entry.
template <class ViolatesFn>
ViolationStructure scan_serial(int m, ViolatesFn&& violates) {
  ViolationStructure out;
  out.m = m;
  out.forbidden.assign(m, 0);
  for (int i = 0; i < m; ++i)
    if (violates(i, i)) out.forbidden[i] = 1;
  for (int i = 0; i < m; ++i) {
    if (out.forbidden[i]) continue;
    for (int j = i + 1; j < m; ++j) {
      if (out.forbidden[j]) continue;
      if (violates(i, j) || violates(j, i)) out.conflicts.emplace_back(i, j);
    }
  }
  return out;
}

template <class ViolatesFn>
ViolationStructure scan_parallel(int m, ViolatesFn&& violates) {
  ViolationStructure out;
  out.m = m;
  out.forbidden.assign(m, 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (int i = 0; i < m; ++i)
    if (violates(i, i)) out.forbidden[i] = 1;

  std::vector<std::vector<std::pair<int, int>>> rows(m);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8)
#endif
  for (int i = 0; i < m; ++i) {
    if (out.forbidden[i]) continue;
    auto& row = rows[i];
    for (int j = i + 1; j < m; ++j) {
      if (out.forbidden[j]) continue;
      if (violates(i, j) || violates(j, i)) row.emplace_back(i, j);
    }
  }
  // Merge in row order so output equals the serial scan bit for bit.
  std::size_t total = 0;
  for (const auto& row : rows) total += row.size();
  out.conflicts.reserve(total);
  for (const auto& row : rows) out.conflicts.insert(out.conflicts.end(), row.begin(), row.end());
  return out;
}

template <class ViolatesFn>
ViolationStructure scan_dispatch(int m, ViolatesFn&& violates) {
  return parallel_active(m * m) ? scan_parallel(m, violates) : scan_serial(m, violates);
}

}  // namespace

ViolationStructure window_scan_serial(const CostMatrix& c, Cost alpha, Cost beta) {
  return scan_serial(c.size(), [&](int i, int j) {
    Cost v = c.at(i, j);
    return v < alpha || v > beta;
  });
}

ViolationStructure window_scan_parallel(const CostMatrix& c, Cost alpha, Cost beta) {
  return scan_parallel(c.size(), [&](int i, int j) {
    Cost v = c.at(i, j);
    return v < alpha || v > beta;
  });
}

ViolationStructure window_scan(const CostMatrix& c, Cost alpha, Cost beta) {
  return scan_dispatch(c.size(), [&](int i, int j) {
    Cost v = c.at(i, j);
    return v < alpha || v > beta;
  });
}

ViolationStructure eff_above_scan_serial(const MaskedMatrix& cm, Cost limit) {
  return scan_serial(cm.base->size(), [&](int i, int j) { return cm.effective(i, j) > limit; });
}

ViolationStructure eff_above_scan_parallel(const MaskedMatrix& cm, Cost limit) {
  return scan_parallel(cm.base->size(), [&](int i, int j) { return cm.effective(i, j) > limit; });
}

ViolationStructure eff_above_scan(const MaskedMatrix& cm, Cost limit) {
  return scan_dispatch(cm.base->size(), [&](int i, int j) { return cm.effective(i, j) > limit; });
}

ViolationStructure eff_below_scan_serial(const MaskedMatrix& cm, Cost limit) {
  return scan_serial(cm.base->size(), [&](int i, int j) { return cm.effective(i, j) < limit; });
}

ViolationStructure eff_below_scan_parallel(const MaskedMatrix& cm, Cost limit) {
  return scan_parallel(cm.base->size(), [&](int i, int j) { return cm.effective(i, j) < limit; });
}

ViolationStructure eff_below_scan(const MaskedMatrix& cm, Cost limit) {
  return scan_dispatch(cm.base->size(), [&](int i, int j) { return cm.effective(i, j) < limit; });
}

}  // namespace qbop::kernels
