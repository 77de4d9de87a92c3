#include "rigidlines/sparsity.hpp"

#include <stdexcept>

#include "rigidlines/connectivity.hpp"

namespace rigidlines {

namespace {

// Each vertex holds two pebbles; an accepted edge is oriented away from the
// vertex that paid for it, so pebbles[v] + out[v].size() == 2 throughout.
// An edge is independent iff four pebbles can be gathered on its endpoints.
class PebbleGame {
 public:
  explicit PebbleGame(int n) : pebbles_(n, 2), out_(n), parent_(n, -1), mark_(n, 0) {}

  bool try_insert(int u, int v) {
    while (pebbles_[u] < 2)
      if (!fetch_pebble(u, v)) return false;
    while (pebbles_[v] < 2)
      if (!fetch_pebble(v, u)) return false;
    --pebbles_[u];
    out_[u].push_back(v);
    return true;
  }

 private:
  // Breadth-first search along out-edges for a free pebble, never entering
  // `blocked`. On success the path is reversed, moving the pebble to `root`.
  bool fetch_pebble(int root, int blocked) {
    ++stamp_;
    mark_[root] = stamp_;
    mark_[blocked] = stamp_;
    queue_.clear();
    queue_.push_back(root);
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      int x = queue_[head];
      for (int y : out_[x]) {
        if (mark_[y] == stamp_) continue;
        mark_[y] = stamp_;
        parent_[y] = x;
        if (pebbles_[y] > 0) {
          --pebbles_[y];
          ++pebbles_[root];
          for (int cur = y; cur != root; cur = parent_[cur]) reverse(parent_[cur], cur);
          return true;
        }
        queue_.push_back(y);
      }
    }
    return false;
  }

  void reverse(int from, int to) {
    auto& row = out_[from];
    for (auto& x : row) {
      if (x == to) {
        x = row.back();
        row.pop_back();
        break;
      }
    }
    out_[to].push_back(from);
  }

  std::vector<int> pebbles_;
  std::vector<std::vector<int>> out_;
  std::vector<int> parent_;
  std::vector<int> mark_;
  std::vector<int> queue_;
  int stamp_ = 0;
};

void require_two_vertices(const Graph& g) {
  if (g.n() < 2) throw std::domain_error("sparsity is defined for n >= 2");
}

}  // namespace

SparsityRankResult sparsity_rank(const Graph& g) {
  require_two_vertices(g);
  PebbleGame game(g.n());
  SparsityRankResult result;
  for (auto [u, v] : g.edges()) {
    if (game.try_insert(u, v)) result.witness.emplace_back(u, v);
  }
  result.rank = static_cast<int>(result.witness.size());
  return result;
}

bool is_laman(const Graph& g) {
  require_two_vertices(g);
  return g.m() == 2 * g.n() - 3 && sparsity_rank(g).rank == g.m();
}

std::optional<Graph> spanning_laman_subgraph(const Graph& g) {
  auto r = sparsity_rank(g);
  if (r.rank != 2 * g.n() - 3) return std::nullopt;
  return Graph(g.n(), std::move(r.witness));
}

bool is_redundant(const Graph& g) {
  require_two_vertices(g);
  const int full = 2 * g.n() - 3;
  for (auto [u, v] : g.edges()) {
    if (sparsity_rank(g.without_edge(u, v)).rank != full) return false;
  }
  return true;
}

bool is_hendrickson(const Graph& g) {
  if (g.n() < 4) throw std::domain_error("Hendrickson test needs n >= 4");
  return is_k_connected(g, 3) && is_redundant(g);
}

}  // namespace rigidlines
