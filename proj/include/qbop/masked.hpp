#pragma once

#include "qbop/core.hpp"

namespace qbop {

/// Virtual big-M masking over a cost matrix. Entries below low_cut read as
/// +big, entries above high_cut read as -big; the base matrix is never
/// mutated. big is 1 + w_p so that every masked value is distinguishable
/// from every real entry.
struct MaskedMatrix {
  const CostMatrix* base = nullptr;
  Cost low_cut;    // entries < low_cut count as +big
  Cost high_cut;   // entries > high_cut count as -big
  Cost big;

  Cost effective(int i, int j) const {
    Cost c = base->at(i, j);
    if (c < low_cut) return big;
    if (c > high_cut) return -big;
    return c;
  }

  bool has_low_mask() const { return low_cut > base->min_entry(); }
  bool has_high_mask() const { return high_cut < base->max_entry(); }

  static MaskedMatrix unmasked(const CostMatrix& c, const ValueLadder& ladder);
};

/// Ascending distinct effective values: the unmasked ladder values inside
/// [low_cut, high_cut], with -big / +big present exactly when some entry is
/// masked that way.
std::vector<Cost> masked_value_ladder(const MaskedMatrix& cm, const ValueLadder& base);

Evaluation evaluate_masked(const MaskedMatrix& cm, const Subset& s);

}  // namespace qbop
