#pragma once

#include <string>
#include <vector>

#include "probe/parametric/region.hpp"

namespace probe::cli {

/// Writes `<stem>.csv` with every iteration and, for two-parameter grids,
/// `<stem>-<iteration>.svg` per iteration into `dir`. Returns the written
/// paths.
std::vector<std::string> write_region_artifacts(const std::vector<parametric::RegionGrid>& scans,
                                                const std::string& dir, const std::string& stem);

/// Whether the cells classified Unsafe from each iteration's own values form
/// a growing chain.
bool unsafe_growth_monotone(const std::vector<parametric::RegionGrid>& scans);

}  // namespace probe::cli
