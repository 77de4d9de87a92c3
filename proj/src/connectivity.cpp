#include "rigidlines/connectivity.hpp"

#include <functional>
#include <stdexcept>

namespace rigidlines {

namespace {

bool connected_without(const std::vector<std::vector<int>>& adj, const std::vector<char>& removed) {
  const int n = static_cast<int>(adj.size());
  int start = -1, alive = 0;
  for (int v = 0; v < n; ++v) {
    if (!removed[v]) {
      ++alive;
      if (start < 0) start = v;
    }
  }
  if (alive <= 1) return true;
  std::vector<char> seen(n, 0);
  std::vector<int> stack{start};
  seen[start] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int y : adj[x]) {
      if (removed[y] || seen[y]) continue;
      seen[y] = 1;
      ++reached;
      stack.push_back(y);
    }
  }
  return reached == alive;
}

}  // namespace

bool is_connected_without(const Graph& g, const std::vector<char>& removed) {
  return connected_without(g.adjacency(), removed);
}

bool is_k_connected(const Graph& g, int k) {
  if (k < 1) throw std::domain_error("connectivity order must be positive");
  if (g.n() <= k) throw std::domain_error("k-connectivity needs n > k");
  const auto adj = g.adjacency();
  const int n = g.n();
  std::vector<char> removed(n, 0);

  // Enumerate removal sets of size 0..k-1 in increasing vertex order.
  std::function<bool(int, int)> all_connected = [&](int from, int left) -> bool {
    if (!connected_without(adj, removed)) return false;
    if (left == 0) return true;
    for (int v = from; v < n; ++v) {
      removed[v] = 1;
      bool ok = all_connected(v + 1, left - 1);
      removed[v] = 0;
      if (!ok) return false;
    }
    return true;
  };
  return all_connected(0, k - 1);
}

}  // namespace rigidlines
