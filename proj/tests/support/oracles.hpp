#pragma once

#include <bit>
#include <cstdint>
#include <queue>
#include <random>
#include <stdexcept>
#include <vector>

#include "rigidlines/graph.hpp"

namespace rigidlines::testing {

// Sparsity straight from the counting definition: an edge set is sparse when
// every vertex subset of size >= 2 spans at most 2|S|-3 of its edges.
class BruteSparsity {
 public:
  explicit BruteSparsity(const Graph& g) : n_(g.n()), m_(g.m()) {
    if (n_ > 10 || m_ > 30) throw std::invalid_argument("brute-force oracle limited to n <= 10, m <= 30");
    const auto& es = g.edges();
    for (std::uint32_t s = 0; s < (1u << n_); ++s) {
      int k = std::popcount(s);
      if (k < 2) continue;
      std::uint32_t mask = 0;
      for (int e = 0; e < m_; ++e)
        if ((s >> es[e].first & 1u) && (s >> es[e].second & 1u)) mask |= 1u << e;
      if (mask) induced_.push_back({mask, 2 * k - 3});
    }
  }

  bool sparse(std::uint32_t edge_subset) const {
    for (const auto& [mask, cap] : induced_)
      if (std::popcount(edge_subset & mask) > cap) return false;
    return true;
  }

  // Largest sparse subset, searching sizes downward.
  int rank() const {
    int top = std::min(m_, 2 * n_ - 3);
    for (int k = top; k > 0; --k) {
      std::uint32_t limit = m_ == 32 ? 0 : (1u << m_);
      for (std::uint32_t s = (1u << k) - 1; s < limit;) {
        if (sparse(s)) return k;
        std::uint32_t c = s & -s, r = s + c;  // next subset of the same size
        s = (((r ^ s) >> 2) / c) | r;
      }
    }
    return 0;
  }

 private:
  struct Induced {
    std::uint32_t mask;
    int cap;
  };
  int n_, m_;
  std::vector<Induced> induced_;
};

inline int brute_sparsity_rank(const Graph& g) { return BruteSparsity(g).rank(); }

// Vertex connectivity by Menger: unit-capacity max flow on the split graph.
inline int disjoint_paths(const Graph& g, int s, int t) {
  int n = g.n();
  int N = 2 * n;  // v_in = 2v, v_out = 2v+1
  std::vector<std::vector<int>> cap(N, std::vector<int>(N, 0));
  for (int v = 0; v < n; ++v) cap[2 * v][2 * v + 1] = (v == s || v == t) ? n : 1;
  for (auto [u, v] : g.edges()) {
    cap[2 * u + 1][2 * v] = n;
    cap[2 * v + 1][2 * u] = n;
  }
  int src = 2 * s + 1, dst = 2 * t, flow = 0;
  while (true) {
    std::vector<int> prev(N, -1);
    prev[src] = src;
    std::queue<int> q;
    q.push(src);
    while (!q.empty() && prev[dst] < 0) {
      int x = q.front();
      q.pop();
      for (int y = 0; y < N; ++y)
        if (prev[y] < 0 && cap[x][y] > 0) {
          prev[y] = x;
          q.push(y);
        }
    }
    if (prev[dst] < 0) return flow;
    for (int y = dst; y != src; y = prev[y]) {
      --cap[prev[y]][y];
      ++cap[y][prev[y]];
    }
    ++flow;
  }
}

inline bool menger_k_connected(const Graph& g, int k) {
  int n = g.n();
  if (n <= k) return false;
  for (int s = 0; s < n; ++s)
    for (int t = s + 1; t < n; ++t)
      if (!g.has_edge(s, t) && disjoint_paths(g, s, t) < k) return false;
  // Only non-adjacent pairs can be separated (Whitney).
  return true;
}

inline Graph random_graph(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) es.push_back({i, j});
  return Graph(n, std::move(es));
}

}  // namespace rigidlines::testing
