#include "rigidlines/henneberg.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <optional>
#include <stdexcept>

#include "rigidlines/errors.hpp"
#include "rigidlines/sparsity.hpp"

namespace rigidlines {

namespace {

void check_vertex(const Graph& g, int x, std::size_t pos, const char* role) {
  if (x < 0 || x >= g.n())
    throw StepError(pos, std::string("vertex ") + role + "=" + std::to_string(x) + " does not exist (n=" +
                             std::to_string(g.n()) + ")");
}

// A reduction removes `removed` (an index into the current graph) or no
// vertex at all (edge deletion); `step` is the forward move in current
// indices, before the vertex is deleted.
struct Reduction {
  Move step;
  int removed = -1;
  Graph result;
};

std::optional<Reduction> try_one_reduction(const Graph& g, int z, const std::function<bool(const Graph&)>& accept) {
  auto adj = g.adjacency();
  if (adj[z].size() != 3) return std::nullopt;
  const auto& nb = adj[z];
  static constexpr std::array<std::array<int, 3>, 3> kPairs{{{0, 1, 2}, {0, 2, 1}, {1, 2, 0}}};
  Graph without = g.without_vertex(z);
  auto shift = [z](int x) { return x > z ? x - 1 : x; };
  for (auto [i, j, k] : kPairs) {
    int x = nb[i], y = nb[j];
    if (g.has_edge(x, y)) continue;
    Graph candidate = without.with_edge(shift(x), shift(y));
    if (accept(candidate)) return Reduction{Move::ext1(x, y, nb[k]), z, std::move(candidate)};
  }
  return std::nullopt;
}

// Drives a reverse search until `next` reports the base graph and turns
// the recorded reductions into a forward sequence on replay indices.
ConstructionSequence run_reduction(Graph g, const std::function<std::optional<Reduction>(const Graph&)>& next) {
  std::vector<int> label(g.n());
  for (int i = 0; i < g.n(); ++i) label[i] = i;

  struct Recorded {
    Move step;  // original labels
    int added;  // original label of the vertex the forward step creates, or -1
  };
  std::vector<Recorded> reversed;
  while (auto r = next(g)) {
    Move s = r->step;
    s.u = label[s.u];
    s.v = label[s.v];
    if (s.w >= 0) s.w = label[s.w];
    int added = -1;
    if (r->removed >= 0) {
      added = label[r->removed];
      label.erase(label.begin() + r->removed);
    }
    reversed.push_back({s, added});
    g = std::move(r->result);
  }

  ConstructionSequence seq;
  seq.relabel = label;
  std::vector<int> to_replay(label.size() + reversed.size(), -1);
  for (int i = 0; i < static_cast<int>(label.size()); ++i) to_replay[label[i]] = i;
  for (auto it = reversed.rbegin(); it != reversed.rend(); ++it) {
    Move s = it->step;
    s.u = to_replay[s.u];
    s.v = to_replay[s.v];
    if (s.w >= 0) s.w = to_replay[s.w];
    seq.steps.push_back(s);
    if (it->added >= 0) {
      to_replay[it->added] = static_cast<int>(seq.relabel.size());
      seq.relabel.push_back(it->added);
    }
  }
  return seq;
}

}  // namespace

std::string move_kind_name(Move::Kind kind) {
  switch (kind) {
    case Move::Kind::ext0: return "ext0";
    case Move::Kind::ext1: return "ext1";
    case Move::Kind::edge: return "edge";
  }
  return "?";
}

void apply_move(Graph& g, const Move& s, std::size_t pos) {
  check_vertex(g, s.u, pos, "u");
  check_vertex(g, s.v, pos, "v");
  if (s.u == s.v) throw StepError(pos, "u and v coincide");
  auto edges = g.edges();
  const int z = g.n();
  switch (s.kind) {
    case Move::Kind::ext0:
      edges.push_back(make_edge(s.u, z));
      edges.push_back(make_edge(s.v, z));
      g = Graph(z + 1, std::move(edges));
      return;
    case Move::Kind::ext1: {
      check_vertex(g, s.w, pos, "w");
      if (s.w == s.u || s.w == s.v) throw StepError(pos, "w must differ from u and v");
      if (!g.has_edge(s.u, s.v))
        throw StepError(pos, "edge {" + std::to_string(s.u) + "," + std::to_string(s.v) + "} is not present");
      g = g.without_edge(s.u, s.v);
      edges = g.edges();
      edges.push_back(make_edge(s.u, z));
      edges.push_back(make_edge(s.v, z));
      edges.push_back(make_edge(s.w, z));
      g = Graph(z + 1, std::move(edges));
      return;
    }
    case Move::Kind::edge:
      if (g.has_edge(s.u, s.v))
        throw StepError(pos, "edge {" + std::to_string(s.u) + "," + std::to_string(s.v) + "} already present");
      g = g.with_edge(s.u, s.v);
      return;
  }
}

Graph apply_henneberg(std::span<const HennebergStep> steps) {
  Graph g = complete_graph(2);
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (steps[i].kind == Move::Kind::edge) throw StepError(i, "edge additions are not Henneberg moves");
    apply_move(g, steps[i], i);
  }
  return g;
}

Graph apply_jj(std::span<const JJStep> steps) {
  Graph g = complete_graph(4);
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (steps[i].kind == Move::Kind::ext0) throw StepError(i, "0-extensions are not Jackson-Jordan moves");
    apply_move(g, steps[i], i);
  }
  return g;
}

ConstructionSequence extract_henneberg(const Graph& g) {
  if (g.n() < 2 || !is_laman(g)) throw std::domain_error("extract_henneberg: graph is not Laman");
  auto next = [](const Graph& h) -> std::optional<Reduction> {
    if (h.n() <= 2) return std::nullopt;
    auto deg = h.degrees();
    for (int z = 0; z < h.n(); ++z) {
      if (deg[z] != 2) continue;
      auto nb = h.adjacency()[z];
      return Reduction{Move::ext0(nb[0], nb[1]), z, h.without_vertex(z)};
    }
    for (int z = 0; z < h.n(); ++z) {
      if (deg[z] != 3) continue;
      // Every degree-3 vertex of a Laman graph admits a 1-reduction, so the
      // lowest one is the only candidate.
      if (auto r = try_one_reduction(h, z, [](const Graph& c) { return is_laman(c); })) return *r;
      break;
    }
    throw InvariantViolation("extract_henneberg: no admissible reverse move on a Laman graph with n=" +
                             std::to_string(h.n()));
  };
  return run_reduction(g, next);
}

ConstructionSequence extract_jj(const Graph& g) {
  if (g.n() < 4 || !is_hendrickson(g)) throw std::domain_error("extract_jj: graph is not Hendrickson");
  auto next = [](const Graph& h) -> std::optional<Reduction> {
    if (h.n() == 4) {
      if (h.m() != 6) throw InvariantViolation("extract_jj: 4-vertex Hendrickson graph other than K4");
      return std::nullopt;
    }
    for (auto [u, v] : h.edges()) {
      Graph candidate = h.without_edge(u, v);
      if (is_hendrickson(candidate)) return Reduction{Move::edge(u, v), -1, std::move(candidate)};
    }
    auto deg = h.degrees();
    for (int z = 0; z < h.n(); ++z) {
      if (deg[z] != 3) continue;
      if (auto r = try_one_reduction(h, z, [](const Graph& c) { return is_hendrickson(c); })) return *r;
    }
    throw InvariantViolation("extract_jj: no edge deletion or 1-reduction keeps the graph Hendrickson (n=" +
                             std::to_string(h.n()) + ", m=" + std::to_string(h.m()) + ")");
  };
  return run_reduction(g, next);
}

bool replay_matches(const Graph& replayed, std::span<const int> relabel, const Graph& original) {
  if (replayed.n() != original.n() || static_cast<int>(relabel.size()) != replayed.n()) return false;
  try {
    return replayed.relabeled(relabel) == original;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

}  // namespace rigidlines
