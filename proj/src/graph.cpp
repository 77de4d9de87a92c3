#include "rigidlines/graph.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "rigidlines/errors.hpp"

namespace rigidlines {

namespace {

std::string edge_str(int u, int v) {
  return "{" + std::to_string(u) + "," + std::to_string(v) + "}";
}

}  // namespace

Graph::Graph(int n) : n_(n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  for (auto& e : edges_) {
    if (e.first == e.second) throw std::invalid_argument("self-loop at vertex " + std::to_string(e.first));
    if (e.first < 0 || e.second < 0 || e.first >= n || e.second >= n)
      throw std::invalid_argument("edge " + edge_str(e.first, e.second) + " has an endpoint outside 0.." +
                                  std::to_string(n - 1));
    e = make_edge(e.first, e.second);
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) throw std::invalid_argument("duplicate edge " + edge_str(dup->first, dup->second));
}

bool Graph::has_edge(int u, int v) const {
  if (u == v) return false;
  return std::binary_search(edges_.begin(), edges_.end(), make_edge(u, v));
}

std::vector<std::vector<int>> Graph::adjacency() const {
  std::vector<std::vector<int>> adj(n_);
  for (auto [u, v] : edges_) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& row : adj) std::sort(row.begin(), row.end());
  return adj;
}

std::vector<int> Graph::degrees() const {
  std::vector<int> deg(n_, 0);
  for (auto [u, v] : edges_) {
    ++deg[u];
    ++deg[v];
  }
  return deg;
}

Graph Graph::with_edge(int u, int v) const {
  auto edges = edges_;
  edges.push_back(make_edge(u, v));
  return Graph(n_, std::move(edges));
}

Graph Graph::without_edge(int u, int v) const {
  auto e = make_edge(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) throw std::invalid_argument("no edge " + edge_str(u, v));
  Graph out = *this;
  out.edges_.erase(out.edges_.begin() + (it - edges_.begin()));
  return out;
}

Graph Graph::without_vertex(int v) const {
  if (v < 0 || v >= n_) throw std::invalid_argument("no vertex " + std::to_string(v));
  std::vector<Edge> edges;
  edges.reserve(edges_.size());
  auto shift = [v](int x) { return x > v ? x - 1 : x; };
  for (auto [a, b] : edges_)
    if (a != v && b != v) edges.emplace_back(shift(a), shift(b));
  return Graph(n_ - 1, std::move(edges));
}

Graph Graph::relabeled(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != n_) throw std::invalid_argument("relabeling has wrong size");
  std::vector<char> hit(n_, 0);
  for (int p : perm) {
    if (p < 0 || p >= n_ || hit[p]) throw std::invalid_argument("relabeling is not a permutation");
    hit[p] = 1;
  }
  std::vector<Edge> edges;
  edges.reserve(edges_.size());
  for (auto [a, b] : edges_) edges.emplace_back(perm[a], perm[b]);
  return Graph(n_, std::move(edges));
}

Graph parse_graph(std::string_view text, GraphFormat format) {
  std::vector<Edge> edges;
  std::vector<std::string> origin;  // field or line of each edge, for error messages
  int n = 0;
  if (format == GraphFormat::json) {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError("json", e.what());
    }
    if (!doc.is_object()) throw ParseError("json", "expected an object");
    if (!doc.contains("n") || !doc["n"].is_number_integer()) throw ParseError("n", "missing or not an integer");
    if (doc["n"].get<long long>() < 0) throw ParseError("n", "negative vertex count");
    n = doc["n"].get<int>();
    if (!doc.contains("edges") || !doc["edges"].is_array()) throw ParseError("edges", "missing or not an array");
    const auto& arr = doc["edges"];
    for (std::size_t k = 0; k < arr.size(); ++k) {
      std::string where = "edges[" + std::to_string(k) + "]";
      const auto& e = arr[k];
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
        throw ParseError(where, "expected a pair of integers");
      edges.emplace_back(e[0].get<int>(), e[1].get<int>());
      origin.push_back(where);
    }
  } else {
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    int m = -1;
    while (std::getline(in, line)) {
      ++lineno;
      auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      std::istringstream ls(line);
      long long x, y;
      std::string rest;
      if (!(ls >> x >> y) || (ls >> rest)) throw ParseError("line " + std::to_string(lineno), "expected two integers");
      if (m < 0) {
        if (x < 0 || y < 0) throw ParseError("line " + std::to_string(lineno), "negative header value");
        n = static_cast<int>(x);
        m = static_cast<int>(y);
        continue;
      }
      if (static_cast<int>(edges.size()) == m)
        throw ParseError("line " + std::to_string(lineno), "more edges than the header declares");
      edges.emplace_back(static_cast<int>(x), static_cast<int>(y));
      origin.push_back("line " + std::to_string(lineno));
    }
    if (m < 0) throw ParseError("line 1", "missing \"n m\" header");
    if (static_cast<int>(edges.size()) != m)
      throw ParseError("line " + std::to_string(lineno), "expected " + std::to_string(m) + " edges, found " +
                                                            std::to_string(edges.size()));
  }
  // Validate here so errors carry the position of the bad entry.
  std::vector<Edge> seen;
  for (std::size_t k = 0; k < edges.size(); ++k) {
    auto [u, v] = edges[k];
    const std::string& where = origin[k];
    if (u == v) throw ParseError(where, "self-loop at vertex " + std::to_string(u));
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw ParseError(where, "endpoint out of range for n=" + std::to_string(n));
    seen.push_back(make_edge(u, v));
  }
  std::vector<Edge> sorted = seen;
  std::sort(sorted.begin(), sorted.end());
  auto dup = std::adjacent_find(sorted.begin(), sorted.end());
  if (dup != sorted.end()) {
    auto k = std::find(seen.begin(), seen.end(), *dup) - seen.begin();
    auto k2 = std::find(seen.begin() + k + 1, seen.end(), *dup) - seen.begin();
    throw ParseError(origin[static_cast<std::size_t>(k2)], "duplicate edge " + edge_str(dup->first, dup->second));
  }
  return Graph(n, std::move(edges));
}

Graph parse_graph(std::string_view text) {
  auto pos = text.find_first_not_of(" \t\r\n");
  bool json = pos != std::string_view::npos && text[pos] == '{';
  return parse_graph(text, json ? GraphFormat::json : GraphFormat::edge_list);
}

std::string serialize_graph(const Graph& g, GraphFormat format) {
  if (format == GraphFormat::json) {
    nlohmann::json edges = nlohmann::json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    nlohmann::json doc = {{"n", g.n()}, {"edges", edges}};
    return doc.dump();
  }
  std::ostringstream out;
  out << g.n() << ' ' << g.m() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

}  // namespace rigidlines
