#pragma once

#include <optional>
#include <vector>

#include "rigidlines/graph.hpp"

namespace rigidlines {

/// Size of a maximum (2,3)-sparse edge subset and one such subset.
///
/// The witness is the lexicographically smallest basis: edges are offered
/// to the pebble game in sorted order.
struct SparsityRankResult {
  int rank = 0;
  std::vector<Edge> witness;
};

/// (2,3)-pebble game. Throws std::domain_error for n < 2.
SparsityRankResult sparsity_rank(const Graph& g);

/// m == 2n-3 and every edge independent.
bool is_laman(const Graph& g);

/// A spanning Laman subgraph when the sparsity rank is 2n-3.
std::optional<Graph> spanning_laman_subgraph(const Graph& g);

/// Every single-edge deletion still has sparsity rank 2n-3.
bool is_redundant(const Graph& g);

/// Redundant and 3-connected. Throws std::domain_error for n < 4.
bool is_hendrickson(const Graph& g);

}  // namespace rigidlines
