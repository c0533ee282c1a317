#pragma once

#include <string>
#include <vector>

namespace genergy {

struct PropertyResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Runs the inequality grids, the exhaustive n <= 8 dominance/validity and
/// spectral-invariant sweeps, and the composition checks. grid_points sizes
/// the lemma grids; throws std::invalid_argument when it is not positive.
std::vector<PropertyResult> run_property_suite(int grid_points);

}  // namespace genergy
