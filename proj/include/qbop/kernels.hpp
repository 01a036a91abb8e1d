#pragma once

#include "qbop/core.hpp"
#include "qbop/masked.hpp"

#include <span>

namespace qbop::kernels {

// The O(m^2) matrix scans are the data-parallel inner loops of every solver.
// Each kernel has a serial reference implementation and an OpenMP variant;
// the plain-named entry points dispatch on kernel_mode(). Both variants
// produce bit-identical output (parallel merges are performed in row order),
// so solver objectives and counters do not depend on the mode.

enum class KernelMode { Serial, Parallel, Auto };

KernelMode kernel_mode();
void set_kernel_mode(KernelMode mode);
bool parallel_active(int work_items);

struct PairExtrema {
  Cost max_value;
  Cost min_value;
};

PairExtrema subset_extrema_serial(const CostMatrix& c, std::span<const int> members);
PairExtrema subset_extrema_parallel(const CostMatrix& c, std::span<const int> members);
PairExtrema subset_extrema(const CostMatrix& c, std::span<const int> members);

PairExtrema masked_subset_extrema(const MaskedMatrix& cm, std::span<const int> members);

// Window scan: entry violates when it falls outside [alpha, beta].
ViolationStructure window_scan_serial(const CostMatrix& c, Cost alpha, Cost beta);
ViolationStructure window_scan_parallel(const CostMatrix& c, Cost alpha, Cost beta);
ViolationStructure window_scan(const CostMatrix& c, Cost alpha, Cost beta);

// Masked scans for the bottleneck searches: entry violates when its
// effective value is above (QBP1) or below (QBP2) the probed threshold.
ViolationStructure eff_above_scan_serial(const MaskedMatrix& cm, Cost limit);
ViolationStructure eff_above_scan_parallel(const MaskedMatrix& cm, Cost limit);
ViolationStructure eff_above_scan(const MaskedMatrix& cm, Cost limit);

ViolationStructure eff_below_scan_serial(const MaskedMatrix& cm, Cost limit);
ViolationStructure eff_below_scan_parallel(const MaskedMatrix& cm, Cost limit);
ViolationStructure eff_below_scan(const MaskedMatrix& cm, Cost limit);

}  // namespace qbop::kernels
