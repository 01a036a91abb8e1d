#pragma once

#include "qbop/core.hpp"
#include "qbop/families.hpp"
#include "qbop/masked.hpp"

namespace qbop {

/// Minimize Z_max over the family under the masked matrix, by binary search
/// on the masked value ladder: threshold t is feasible when some member has
/// every effective entry <= t. Needs at most ceil(log2 p) + 2 feasibility
/// tests. The witness of the last feasible probe is returned without a
/// re-solve; its effective Z_max equals the optimum.
SolveResult solve_qbp1(const MaskedMatrix& cm, const Family& fam, const FeasibilityMode& mode);

/// Maximize Z_min under the masked matrix; descending binary search.
SolveResult solve_qbp2(const MaskedMatrix& cm, const Family& fam, const FeasibilityMode& mode);

}  // namespace qbop
