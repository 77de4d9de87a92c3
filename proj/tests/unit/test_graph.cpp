#include <doctest.h>

#include <array>

#include "rigidlines/errors.hpp"
#include "rigidlines/graph.hpp"

using namespace rigidlines;

TEST_CASE("parse json graph") {
  auto k4 = parse_graph(R"({"n":4,"edges":[[0,1],[1,2],[2,3],[3,0],[0,2],[1,3]]})", GraphFormat::json);
  CHECK(k4 == complete_graph(4));
  auto k2 = parse_graph(R"({"n":2,"edges":[[0,1]]})", GraphFormat::json);
  CHECK(k2.n() == 2);
  CHECK(k2.edges() == std::vector<Edge>{{0, 1}});
}

TEST_CASE("parse rejects malformed graphs") {
  CHECK_THROWS_WITH_AS(parse_graph(R"({"n":3,"edges":[[0,1],[0,1]]})", GraphFormat::json),
                       doctest::Contains("edges[1]"), ParseError);
  CHECK_THROWS_AS(parse_graph(R"({"n":3,"edges":[[1,1]]})", GraphFormat::json), ParseError);
  CHECK_THROWS_AS(parse_graph(R"({"n":3,"edges":[[0,3]]})", GraphFormat::json), ParseError);
  CHECK_THROWS_AS(parse_graph(R"({"n":3,"edges":[[0,-1]]})", GraphFormat::json), ParseError);
  CHECK_THROWS_AS(parse_graph(R"({"edges":[]})", GraphFormat::json), ParseError);
  CHECK_THROWS_AS(parse_graph(R"({"n":3,"edges":[[0,1,2]]})", GraphFormat::json), ParseError);
  CHECK_THROWS_AS(parse_graph("{not json", GraphFormat::json), ParseError);
  CHECK_THROWS_WITH_AS(parse_graph("3 2\n0 1\n1 1\n", GraphFormat::edge_list), doctest::Contains("line 3"),
                       ParseError);
  CHECK_THROWS_WITH_AS(parse_graph("3 2\n0 1\n\n1 0\n", GraphFormat::edge_list), doctest::Contains("line 4"),
                       ParseError);
  CHECK_THROWS_AS(parse_graph("3 2\n0 1\n", GraphFormat::edge_list), ParseError);
  CHECK_THROWS_AS(parse_graph("3 1\n0 1\n1 2\n", GraphFormat::edge_list), ParseError);
  CHECK_THROWS_AS(parse_graph("3 1\n0 x\n", GraphFormat::edge_list), ParseError);
}

TEST_CASE("edge list format") {
  auto g = parse_graph("4 3\n0 1\n2 1\n3 0\n", GraphFormat::edge_list);
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {0, 3}, {1, 2}});
  CHECK(parse_graph("4 3\n0 1\n2 1\n3 0\n") == g);
  CHECK(serialize_graph(g, GraphFormat::edge_list) == "4 3\n0 1\n0 3\n1 2\n");
}

TEST_CASE("serialize and parse round trip on the catalog") {
  for (const auto& [name, g] : standard_catalog(9, 7)) {
    CAPTURE(name);
    for (auto fmt : {GraphFormat::json, GraphFormat::edge_list}) {
      auto text = serialize_graph(g, fmt);
      auto back = parse_graph(text, fmt);
      CHECK(back == g);
      CHECK(serialize_graph(back, fmt) == text);
    }
  }
}

TEST_CASE("named generators") {
  CHECK(complete_graph(4).m() == 6);
  auto w = wheel_graph(5);
  CHECK(w.n() == 5);
  CHECK(w.m() == 8);
  CHECK(w.degrees()[0] == 4);
  CHECK(cycle_graph(4).m() == 4);
  CHECK(path_graph(5).m() == 4);
  CHECK_THROWS_AS(complete_graph(0), std::invalid_argument);

  std::array<long long, 1> four{4};
  CHECK(generate("complete", four) == complete_graph(4));
  CHECK(generate("wheel", four) == wheel_graph(4));
  CHECK_THROWS_AS(generate("petersen", four), std::invalid_argument);
  std::array<long long, 1> bad{-1};
  CHECK_THROWS_AS(generate("cycle", bad), std::invalid_argument);
  CHECK_THROWS_AS(generate("laman_random", four), std::invalid_argument);
}

TEST_CASE("generators are deterministic") {
  for (std::uint64_t s = 0; s < 20; ++s) {
    CHECK(laman_random(9, s) == laman_random(9, s));
    CHECK(hendrickson_random(8, s, 2) == hendrickson_random(8, s, 2));
  }
  CHECK(standard_catalog(7, 3).size() == standard_catalog(7, 3).size());
  auto a = standard_catalog(7, 3), b = standard_catalog(7, 3);
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].graph == b[i].graph);
}

TEST_CASE("graph edits") {
  auto g = complete_graph(4).without_edge(0, 1);
  CHECK(!g.has_edge(1, 0));
  CHECK(g.with_edge(1, 0) == complete_graph(4));
  CHECK_THROWS_AS(g.with_edge(2, 3), std::invalid_argument);
  CHECK_THROWS_AS(g.without_edge(0, 1), std::invalid_argument);
  auto h = wheel_graph(5).without_vertex(0);
  CHECK(h == cycle_graph(4));
  std::vector<int> perm{1, 2, 3, 0};
  auto c = cycle_graph(4).relabeled(perm);
  CHECK(c == cycle_graph(4));
  std::vector<int> bad{0, 0, 1, 2};
  CHECK_THROWS_AS(c.relabeled(bad), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
}
