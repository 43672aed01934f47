#pragma once

#include <vector>

#include "nbhd/graph.hpp"

namespace nbhd {

inline constexpr int default_chromatic_cap = 32;

/// Greedy DSATUR colouring; colours are 0-based.
std::vector<int> dsatur_coloring(const Graph & g);

/// Exact chromatic number by branch and bound (clique lower bound, DSATUR upper
/// bound, DSATUR-ordered backtracking in between).
/// Throws TooLarge above `cap` vertices and DomainError on the empty graph.
int chromatic_number(const Graph & g, int cap = default_chromatic_cap);

} // namespace nbhd
