#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "rigidlines/graph.hpp"
#include "rigidlines/henneberg.hpp"
#include "rigidlines/random.hpp"

namespace rigidlines {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

Graph random_relabel(const Graph& g, Rng& rng) {
  std::vector<int> perm(g.n());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return g.relabeled(perm);
}

}  // namespace

Graph complete_graph(int n) {
  require(n >= 1, "complete: n must be >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph(n, std::move(edges));
}

Graph cycle_graph(int n) {
  require(n >= 3, "cycle: n must be >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back(make_edge(i, (i + 1) % n));
  return Graph(n, std::move(edges));
}

Graph path_graph(int n) {
  require(n >= 1, "path: n must be >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, std::move(edges));
}

Graph wheel_graph(int n) {
  require(n >= 4, "wheel: n must be >= 4");
  std::vector<Edge> edges;
  const int rim = n - 1;
  for (int i = 0; i < rim; ++i) {
    edges.emplace_back(0, i + 1);
    edges.push_back(make_edge(i + 1, (i + 1) % rim + 1));
  }
  return Graph(n, std::move(edges));
}

Graph laman_random(int n, std::uint64_t seed) {
  require(n >= 2, "laman_random: n must be >= 2");
  Rng rng = make_rng(seed);
  Graph g = complete_graph(2);
  std::vector<Move> steps;
  for (int k = 2; k < n; ++k) {
    int u = static_cast<int>(uniform_int(rng, 0, k - 1));
    int v = static_cast<int>(uniform_int(rng, 0, k - 2));
    if (v >= u) ++v;
    Move step = Move::ext0(u, v);
    if (k >= 3 && uniform_int(rng, 0, 1) == 1) {
      auto [a, b] = g.edges()[uniform_int(rng, 0, g.m() - 1)];
      int w = static_cast<int>(uniform_int(rng, 0, k - 3));
      for (int x : {std::min(a, b), std::max(a, b)})
        if (w >= x) ++w;
      step = Move::ext1(a, b, w);
    }
    apply_move(g, step, steps.size());
    steps.push_back(step);
  }
  return random_relabel(g, rng);
}

Graph hendrickson_random(int n, std::uint64_t seed, int edge_additions) {
  require(n >= 4, "hendrickson_random: n must be >= 4");
  require(edge_additions >= 0, "hendrickson_random: negative edge-addition count");
  Rng rng = make_rng(seed);
  Graph g = complete_graph(4);
  int extensions = n - 4;
  int additions = edge_additions;
  std::size_t pos = 0;
  while (extensions > 0 || additions > 0) {
    const long long max_edges = static_cast<long long>(g.n()) * (g.n() - 1) / 2;
    bool can_add = additions > 0 && g.m() < max_edges;
    if (!can_add && extensions == 0) break;
    bool extend = extensions > 0 && (!can_add || uniform_int(rng, 0, extensions + additions - 1) < extensions);
    if (extend) {
      auto [a, b] = g.edges()[uniform_int(rng, 0, g.m() - 1)];
      int w = static_cast<int>(uniform_int(rng, 0, g.n() - 3));
      for (int x : {a, b})
        if (w >= x) ++w;
      apply_move(g, Move::ext1(a, b, w), pos++);
      --extensions;
    } else {
      std::vector<Edge> missing;
      for (int i = 0; i < g.n(); ++i)
        for (int j = i + 1; j < g.n(); ++j)
          if (!g.has_edge(i, j)) missing.emplace_back(i, j);
      auto [a, b] = missing[uniform_int(rng, 0, static_cast<long long>(missing.size()) - 1)];
      apply_move(g, Move::edge(a, b), pos++);
      --additions;
    }
  }
  return random_relabel(g, rng);
}

Graph generate(std::string_view name, std::span<const long long> params) {
  auto param = [&](std::size_t i) -> long long {
    if (i >= params.size()) throw std::invalid_argument(std::string(name) + ": missing parameter " + std::to_string(i));
    return params[i];
  };
  auto arity = [&](std::size_t lo, std::size_t hi) {
    if (params.size() < lo || params.size() > hi)
      throw std::invalid_argument(std::string(name) + ": expected " + std::to_string(lo) +
                                  (lo == hi ? "" : "-" + std::to_string(hi)) + " parameters");
  };
  if (name == "complete") return arity(1, 1), complete_graph(static_cast<int>(param(0)));
  if (name == "cycle") return arity(1, 1), cycle_graph(static_cast<int>(param(0)));
  if (name == "path") return arity(1, 1), path_graph(static_cast<int>(param(0)));
  if (name == "wheel") return arity(1, 1), wheel_graph(static_cast<int>(param(0)));
  if (name == "laman_random")
    return arity(2, 2), laman_random(static_cast<int>(param(0)), static_cast<std::uint64_t>(param(1)));
  if (name == "hendrickson_random") {
    arity(2, 3);
    int n = static_cast<int>(param(0));
    int extra = params.size() > 2 ? static_cast<int>(param(2)) : std::max(0, (n - 4) / 2);
    return hendrickson_random(n, static_cast<std::uint64_t>(param(1)), extra);
  }
  throw std::invalid_argument("unknown generator '" + std::string(name) + "'");
}

std::vector<NamedGraph> standard_catalog(int n_max, std::uint64_t seed) {
  std::vector<NamedGraph> out;
  auto add = [&](std::string name, Graph g) { out.push_back({std::move(name), std::move(g)}); };
  for (int n = 2; n <= n_max; ++n) add("complete(" + std::to_string(n) + ")", complete_graph(n));
  for (int n = 3; n <= n_max; ++n) add("cycle(" + std::to_string(n) + ")", cycle_graph(n));
  for (int n = 2; n <= n_max; ++n) add("path(" + std::to_string(n) + ")", path_graph(n));
  for (int n = 4; n <= n_max; ++n) add("wheel(" + std::to_string(n) + ")", wheel_graph(n));
  for (int n = 2; n <= n_max; ++n)
    for (std::uint64_t k = 0; k < 2; ++k) {
      auto s = derive_seed(seed, 100 * n + k);
      add("laman_random(" + std::to_string(n) + "," + std::to_string(s) + ")", laman_random(n, s));
    }
  for (int n = 4; n <= n_max; ++n)
    for (std::uint64_t k = 0; k < 2; ++k) {
      auto s = derive_seed(seed, 1000 + 100 * n + k);
      int extra = static_cast<int>(k) * (n - 3);
      add("hendrickson_random(" + std::to_string(n) + "," + std::to_string(s) + "," + std::to_string(extra) + ")",
          hendrickson_random(n, s, extra));
    }
  if (n_max >= 6) {
    add("k33", Graph(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}}));
    add("prism", Graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}}));
    // Two K4's sharing edge {0,1}: redundant but only 2-connected.
    add("k4_pair", Graph(6, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}, {0, 5}, {1, 4}, {1, 5}, {4, 5}}));
  }
  return out;
}

}  // namespace rigidlines
