#pragma once

#include "genergy/graph.hpp"

namespace genergy {

/// Exact planarity via Demoucron-style incremental embedding, run per
/// biconnected component. n <= 16.
bool is_planar(const Graph& g);

}  // namespace genergy
