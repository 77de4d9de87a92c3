#pragma once

#include "rigidlines/graph.hpp"

namespace rigidlines {

/// True iff g stays connected after deleting any set of fewer than k
/// vertices. Brute force over removal sets; fine for the n <= 200 range.
/// Throws std::domain_error unless n > k >= 1.
bool is_k_connected(const Graph& g, int k);

/// Connectivity of g with the vertices flagged in `removed` deleted.
bool is_connected_without(const Graph& g, const std::vector<char>& removed);

}  // namespace rigidlines
