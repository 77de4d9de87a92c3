#include <doctest.h>

#include "oracles.hpp"
#include "rigidlines/connectivity.hpp"

using namespace rigidlines;
using rigidlines::testing::menger_k_connected;
using rigidlines::testing::random_graph;

TEST_CASE("k-connectivity examples") {
  CHECK(is_k_connected(complete_graph(4), 3));
  CHECK_FALSE(is_k_connected(cycle_graph(4), 3));
  CHECK(is_k_connected(cycle_graph(4), 2));
  CHECK(is_k_connected(wheel_graph(5), 3));
  CHECK_FALSE(is_k_connected(path_graph(4), 2));
  CHECK(is_k_connected(path_graph(4), 1));
  CHECK_FALSE(is_k_connected(Graph(3, {{0, 1}}), 1));
  CHECK_THROWS_AS(is_k_connected(complete_graph(3), 3), std::domain_error);
  CHECK_THROWS_AS(is_k_connected(complete_graph(3), 0), std::domain_error);
}

TEST_CASE("agrees with Menger max-flow oracle") {
  for (const auto& [name, g] : standard_catalog(8, 2)) {
    CAPTURE(name);
    for (int k = 1; k < std::min(g.n(), 5); ++k) CHECK(is_k_connected(g, k) == menger_k_connected(g, k));
  }
  for (std::uint64_t s = 0; s < 200; ++s) {
    auto g = random_graph(4 + static_cast<int>(s % 5), 0.35 + 0.05 * static_cast<double>(s % 10), s);
    CAPTURE(serialize_graph(g));
    for (int k = 1; k < std::min(g.n(), 5); ++k) CHECK(is_k_connected(g, k) == menger_k_connected(g, k));
  }
}

TEST_CASE("k-connected implies (k-1)-connected") {
  for (std::uint64_t s = 0; s < 100; ++s) {
    auto g = random_graph(6 + static_cast<int>(s % 3), 0.6, 77 + s);
    for (int k = 2; k < g.n(); ++k)
      if (is_k_connected(g, k)) CHECK(is_k_connected(g, k - 1));
  }
}

TEST_CASE("connectivity with removed vertices") {
  auto g = cycle_graph(4);
  CHECK(is_connected_without(g, {0, 0, 0, 0}));
  CHECK(is_connected_without(g, {1, 0, 0, 0}));
  CHECK_FALSE(is_connected_without(g, {1, 0, 1, 0}));
}
