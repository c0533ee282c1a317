#pragma once

#include "genergy/graph.hpp"

namespace genergy {

/// Exact chromatic number via branch and bound (clique lower bound, greedy
/// upper bound, saturation-guided k-coloring search). n <= 16.
int chromatic_number(const Graph& g);

}  // namespace genergy
