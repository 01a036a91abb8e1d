#pragma once

#include "qbop/core.hpp"
#include "qbop/families.hpp"

#include <filesystem>
#include <string>

namespace qbop {

/// LP-format mixed integer program for the knapsack instance: minimize u - v
/// over binaries x_i and pair activations y_i_j with the demand row, the
/// three y-linking families, and the u/v range rows. M is the largest cost
/// entry; u-rows are emitted only where c_ij != 0 and v-rows only where
/// c_ij != M (both are vacuous at those entries).
std::string export_mip_lp(const CostMatrix& c, const KnapsackFamily& fam);

void write_mip_lp(const CostMatrix& c, const KnapsackFamily& fam, const std::filesystem::path& path);

}  // namespace qbop
