#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rigidlines {

/// Undirected edge stored with `first < second`.
using Edge = std::pair<int, int>;

inline Edge make_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

/// Simple undirected graph on vertices 0..n-1.
///
/// The edge list is kept sorted and free of loops and duplicates, so two
/// graphs compare equal exactly when their edge sets are equal and
/// serialization is byte-stable.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  /// Throws std::invalid_argument on a self-loop, duplicate edge or
  /// out-of-range endpoint.
  Graph(int n, std::vector<Edge> edges);

  int n() const noexcept { return n_; }
  int m() const noexcept { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  bool has_edge(int u, int v) const;
  std::vector<std::vector<int>> adjacency() const;
  std::vector<int> degrees() const;

  Graph with_edge(int u, int v) const;
  Graph without_edge(int u, int v) const;
  /// Removes vertex `v`; vertices above it shift down by one.
  Graph without_vertex(int v) const;
  /// Vertex i of this graph becomes vertex perm[i] of the result.
  Graph relabeled(std::span<const int> perm) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
};

enum class GraphFormat { json, edge_list };

/// JSON: {"n": 4, "edges": [[0,1],...]}. Edge list: "n m" then m lines "i j".
Graph parse_graph(std::string_view text, GraphFormat format);
/// Picks JSON when the first non-blank character is '{'.
Graph parse_graph(std::string_view text);
std::string serialize_graph(const Graph& g, GraphFormat format = GraphFormat::json);

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
/// Hub 0 joined to a cycle on 1..n-1.
Graph wheel_graph(int n);
/// Random Henneberg sequence from K2 followed by a random relabeling.
Graph laman_random(int n, std::uint64_t seed);
/// Random edge additions and 1-extensions from K4, randomly relabeled.
Graph hendrickson_random(int n, std::uint64_t seed, int edge_additions);

/// Catalog dispatch. Parameters per name:
///   complete/cycle/path/wheel: [n]
///   laman_random: [n, seed]
///   hendrickson_random: [n, seed] or [n, seed, edge_additions]
Graph generate(std::string_view name, std::span<const long long> params);

struct NamedGraph {
  std::string name;
  Graph graph;
};

/// Deterministic test catalog of every generator family with n <= n_max,
/// plus a few hand-built graphs (K_{3,3}, the triangular prism, two K4's
/// glued along an edge).
std::vector<NamedGraph> standard_catalog(int n_max, std::uint64_t seed);

}  // namespace rigidlines
