#pragma once

#include <span>
#include <string>
#include <vector>

#include "rigidlines/graph.hpp"

namespace rigidlines {

/// One construction move.
///
///   ext0(u, v)     new vertex joined to u and v
///   ext1(u, v, w)  edge uv replaced by a new vertex joined to u, v and w
///   edge(u, v)     edge addition between non-adjacent u and v
///
/// New vertices always receive the next free index.
struct Move {
  enum class Kind { ext0, ext1, edge };
  Kind kind = Kind::ext0;
  int u = 0;
  int v = 0;
  int w = -1;

  static Move ext0(int u, int v) { return {Kind::ext0, u, v, -1}; }
  static Move ext1(int u, int v, int w) { return {Kind::ext1, u, v, w}; }
  static Move edge(int u, int v) { return {Kind::edge, u, v, -1}; }

  friend bool operator==(const Move&, const Move&) = default;
};

/// Henneberg sequences use ext0/ext1; Jackson-Jordan sequences use edge/ext1.
using HennebergStep = Move;
using JJStep = Move;

/// A construction sequence together with the relabeling that certifies the
/// replay: replayed vertex i corresponds to vertex relabel[i] of the input.
struct ConstructionSequence {
  std::vector<Move> steps;
  std::vector<int> relabel;
};

/// Applies one move in place. Throws StepError(position) when invalid.
void apply_move(Graph& g, const Move& step, std::size_t position);

/// Replays a Henneberg sequence starting from K2.
Graph apply_henneberg(std::span<const HennebergStep> steps);

/// Reverse-engineers a Henneberg sequence. Prefers deleting the lowest
/// degree-2 vertex; otherwise 1-reduces the lowest degree-3 vertex using
/// the first candidate edge (lexicographic) that leaves a Laman graph.
/// Throws std::domain_error if g is not Laman.
ConstructionSequence extract_henneberg(const Graph& g);

/// Replays a Jackson-Jordan sequence starting from K4.
Graph apply_jj(std::span<const JJStep> steps);

/// Exhaustive reverse search: first any edge whose deletion keeps the graph
/// Hendrickson, then any degree-3 vertex 1-reduction that does. Throws
/// std::domain_error if g is not Hendrickson and InvariantViolation if no
/// reverse step exists.
ConstructionSequence extract_jj(const Graph& g);

/// True iff `replayed` relabeled through `relabel` equals `original`.
bool replay_matches(const Graph& replayed, std::span<const int> relabel, const Graph& original);

std::string move_kind_name(Move::Kind kind);

}  // namespace rigidlines
