#include "qbop/masked.hpp"

#include <algorithm>

namespace qbop {

MaskedMatrix MaskedMatrix::unmasked(const CostMatrix& c, const ValueLadder& ladder) {
  return MaskedMatrix{&c, c.min_entry(), c.max_entry(), ladder.value(ladder.size()) + 1};
}

std::vector<Cost> masked_value_ladder(const MaskedMatrix& cm, const ValueLadder& base) {
  std::vector<Cost> out;
  bool any_low = false, any_high = false;
  for (Cost v : base.values()) {
    // A ladder value is present in the matrix by construction, so masked
    // sentinels appear exactly when a value falls outside the cuts.
    if (v < cm.low_cut) {
      any_low = true;
    } else if (v > cm.high_cut) {
      any_high = true;
    } else {
      out.push_back(v);
    }
  }
  if (any_high) out.insert(out.begin(), -cm.big);
  if (any_low) out.push_back(cm.big);
  return out;
}

Evaluation evaluate_masked(const MaskedMatrix& cm, const Subset& s) {
  validate_subset(s, cm.base->size());
  Cost mx = cm.effective(s[0], s[0]);
  Cost mn = mx;
  for (int i : s) {
    for (int j : s) {
      Cost v = cm.effective(i, j);
      mx = std::max(mx, v);
      mn = std::min(mn, v);
    }
  }
  return {mx, mn, mx - mn};
}

}  // namespace qbop
