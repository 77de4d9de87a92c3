#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "rigidlines/henneberg.hpp"
#include "rigidlines/numeric.hpp"
#include "rigidlines/random.hpp"
#include "rigidlines/sparsity.hpp"

using namespace rigidlines;
using rigidlines::testing::brute_sparsity_rank;
using rigidlines::testing::random_graph;

TEST_CASE("sparsity rank on small graphs") {
  auto k2 = sparsity_rank(complete_graph(2));
  CHECK(k2.rank == 1);
  CHECK(k2.witness == std::vector<Edge>{{0, 1}});
  CHECK(sparsity_rank(cycle_graph(4)).rank == 4);
  auto k4 = sparsity_rank(complete_graph(4));
  CHECK(k4.rank == 5);
  // Lexicographically smallest basis drops the last edge.
  CHECK(k4.witness == complete_graph(4).without_edge(2, 3).edges());
  CHECK(sparsity_rank(Graph(5)).rank == 0);
  CHECK_THROWS_AS(sparsity_rank(Graph(1)), std::domain_error);
}

TEST_CASE("brute-force oracle on hand-checked graphs") {
  CHECK(brute_sparsity_rank(complete_graph(2)) == 1);
  CHECK(brute_sparsity_rank(cycle_graph(4)) == 4);
  CHECK(brute_sparsity_rank(complete_graph(4)) == 5);
  // K4 plus a pendant edge: 7 = 2*5-3 edges but only 6 independent.
  CHECK(brute_sparsity_rank(Graph(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {3, 4}})) == 6);
  // Two disjoint K4's: each contributes 5.
  CHECK(brute_sparsity_rank(Graph(8, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
                                      {4, 5}, {4, 6}, {4, 7}, {5, 6}, {5, 7}, {6, 7}})) == 10);
  CHECK(brute_sparsity_rank(Graph(4)) == 0);
}

TEST_CASE("brute-force oracle agrees with the pebble game") {
  for (const auto& [name, g] : standard_catalog(7, 11)) {
    CAPTURE(name);
    CHECK(sparsity_rank(g).rank == brute_sparsity_rank(g));
  }
  for (std::uint64_t s = 0; s < 60; ++s) {
    auto g = random_graph(2 + static_cast<int>(s % 6), 0.2 + 0.1 * static_cast<double>(s % 7), s);
    CAPTURE(serialize_graph(g));
    auto r = sparsity_rank(g);
    CHECK(r.rank == brute_sparsity_rank(g));
    // The witness itself is sparse and of full size.
    Graph w(g.n(), r.witness);
    CHECK(brute_sparsity_rank(w) == r.rank);
    CHECK(r.rank <= std::min(g.m(), 2 * g.n() - 3));
  }
}

TEST_CASE("laman recognition") {
  CHECK(is_laman(complete_graph(2)));
  CHECK(is_laman(complete_graph(3)));
  CHECK_FALSE(is_laman(complete_graph(4)));
  CHECK(is_laman(complete_graph(4).without_edge(0, 1)));
  CHECK_FALSE(is_laman(cycle_graph(4)));
  // Right count, wrong distribution: K4 plus a pendant path.
  CHECK_FALSE(is_laman(Graph(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {3, 4}})));
  for (std::uint64_t s = 0; s < 30; ++s) CHECK(is_laman(laman_random(2 + static_cast<int>(s % 11), s)));
  CHECK_THROWS_AS(is_laman(Graph(1)), std::domain_error);
}

TEST_CASE("spanning laman subgraph") {
  auto k4 = spanning_laman_subgraph(complete_graph(4));
  REQUIRE(k4);
  CHECK(k4->m() == 5);
  CHECK(is_laman(*k4));
  CHECK_FALSE(spanning_laman_subgraph(cycle_graph(4)));
  CHECK(spanning_laman_subgraph(complete_graph(2)) == complete_graph(2));
}

TEST_CASE("redundancy and hendrickson") {
  CHECK(is_redundant(complete_graph(4)));
  CHECK(is_redundant(wheel_graph(5)));
  CHECK(is_hendrickson(complete_graph(4)));
  CHECK(is_hendrickson(wheel_graph(5)));
  CHECK(is_hendrickson(complete_graph(6)));
  for (std::uint64_t s = 0; s < 10; ++s) {
    auto g = laman_random(4 + static_cast<int>(s % 6), s);
    CHECK_FALSE(is_redundant(g));
    CHECK_FALSE(is_hendrickson(g));
    CHECK(is_hendrickson(hendrickson_random(4 + static_cast<int>(s % 5), s, static_cast<int>(s % 3))));
  }
  // Two K4's sharing an edge: redundant, not 3-connected.
  Graph glued(6, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}, {0, 5}, {1, 4}, {1, 5}, {4, 5}});
  CHECK(is_redundant(glued));
  CHECK_FALSE(is_hendrickson(glued));
  // K_{3,3} is 3-connected with 9 = 2n-3 edges, so not redundant.
  CHECK_FALSE(is_hendrickson(Graph(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}})));
  CHECK_THROWS_AS(is_hendrickson(complete_graph(3)), std::domain_error);
}

TEST_CASE("rank is monotone with unit steps under edge addition") {
  for (std::uint64_t s = 0; s < 20; ++s) {
    int n = 3 + static_cast<int>(s % 6);
    auto rng = make_rng(s);
    Graph g(n);
    int prev = 0;
    std::vector<Edge> all = complete_graph(n).edges();
    std::shuffle(all.begin(), all.end(), rng);
    for (auto [u, v] : all) {
      g = g.with_edge(u, v);
      int r = sparsity_rank(g).rank;
      CHECK(r >= prev);
      CHECK(r <= prev + 1);
      prev = r;
    }
    CHECK(prev == 2 * n - 3);
  }
}

TEST_CASE("extensions of a laman graph stay laman") {
  for (std::uint64_t s = 0; s < 20; ++s) {
    auto g = laman_random(3 + static_cast<int>(s % 7), s);
    auto rng = make_rng(s, 1);
    int n = g.n();
    int u = static_cast<int>(uniform_int(rng, 0, n - 1));
    int v = (u + 1 + static_cast<int>(uniform_int(rng, 0, n - 2))) % n;
    auto h = g;
    apply_move(h, Move::ext0(u, v), 0);
    CHECK(is_laman(h));
    auto [a, b] = g.edges()[static_cast<std::size_t>(uniform_int(rng, 0, g.m() - 1))];
    int w = 0;
    while (w == a || w == b) ++w;
    h = g;
    apply_move(h, Move::ext1(a, b, w), 0);
    CHECK(is_laman(h));
  }
}

TEST_CASE("sparsity rank equals generic rigidity rank") {
  for (const auto& [name, g] : standard_catalog(8, 5)) {
    CAPTURE(name);
    CHECK(sparsity_rank(g).rank == rigidity_rank(g, 5, 17));
  }
  for (std::uint64_t s = 0; s < 100; ++s) {
    auto g = random_graph(2 + static_cast<int>(s % 7), 0.3 + 0.05 * static_cast<double>(s % 9), 1000 + s);
    CAPTURE(serialize_graph(g));
    CHECK(sparsity_rank(g).rank == rigidity_rank(g, 5, s));
    CHECK(sparsity_rank(g).rank == rigidity_rank(g, 2, s, true));
  }
}
