#include <doctest.h>

#include <cmath>

#include "rigidlines/exact.hpp"
#include "rigidlines/geometry.hpp"
#include "rigidlines/random.hpp"

using namespace rigidlines;

namespace {

Line random_line(Rng& rng, double box = 5) {
  return {uniform_real(rng, -box, box), uniform_real(rng, -box, box), uniform_real(rng, -box, box),
          uniform_real(rng, -box, box)};
}

Line through(const Point3& p, const Point3& q) {
  auto l = line_through(p, q);
  REQUIRE(l);
  return *l;
}

}  // namespace

TEST_CASE("meet residual") {
  CHECK(meet_residual({0, 0, 0, 0}, {0, 0, 1, 0}) == 0);
  CHECK(meet_residual({0, 0, 0, 0}, {1, 0, 0, 1}) == doctest::Approx(1));
  Line l{1.5, -2, 0.25, 3};
  CHECK(meet_residual(l, l) == 0);
  auto rng = make_rng(1);
  for (int i = 0; i < 1000; ++i) {
    auto a = random_line(rng), b = random_line(rng);
    CHECK(meet_residual(a, b) == meet_residual(b, a));
  }
  // Parallel lines count as meeting.
  CHECK(lines_meet({0, 0, 1, 2}, {5, -3, 1, 2}));
  CHECK_FALSE(lines_meet({0, 0, 0, 0}, {1, 0, 0, 1}));
}

TEST_CASE("meet residual vanishes on lines through a common point") {
  auto rng = make_rng(2);
  for (int i = 0; i < 200; ++i) {
    Point3 p(uniform_real(rng, -3, 3), uniform_real(rng, -3, 3), uniform_real(rng, -3, 3));
    Point3 q1 = p + Point3(uniform_real(rng, -3, 3), uniform_real(rng, -3, 3), 1 + uniform_real(rng, 0, 2));
    Point3 q2 = p + Point3(uniform_real(rng, -3, 3), uniform_real(rng, -3, 3), -1 - uniform_real(rng, 0, 2));
    CHECK(std::abs(meet_residual(through(p, q1), through(p, q2))) < 1e-10);
  }
}

TEST_CASE("relative tolerance scales with coordinates") {
  Line a{0, 0, 0, 0}, b{0, 0, 1, 0};
  Line big_a{1e6, 0, 0, 0}, big_b{1e6, 1e-3, 1, 0};
  // |g| = 1e-3 is large in absolute terms but small relative to 1e6.
  CHECK(lines_meet(big_a, big_b, 1e-8));
  CHECK(lines_meet(a, b));
  CHECK(pair_scale(big_a, big_b) == doctest::Approx(1 + 1e6));
}

TEST_CASE("intersection graph") {
  LineConfig origin{{0, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
  CHECK(intersection_graph(origin) == complete_graph(3));
  LineConfig skew{{0, 0, 0, 0}, {1, 0, 0, 1}};
  CHECK(intersection_graph(skew).m() == 0);
}

TEST_CASE("common point") {
  LineConfig two{{0, 0, 0, 0}, {0, 0, 1, 0}};
  auto f = common_point(two);
  REQUIRE(f.status == PointFit::Status::point);
  CHECK(f.point.norm() < 1e-12);
  LineConfig par{{0, 0, 1, 2}, {3, 1, 1, 2}, {-2, 5, 1, 2}};
  CHECK(common_point(par).status == PointFit::Status::parallel_family);
  LineConfig skew{{0, 0, 0, 0}, {1, 0, 0, 1}};
  CHECK_FALSE(common_point(skew).found());
  Point3 p(1, 2, 3);
  LineConfig many{through(p, {0, 0, 0}), through(p, {4, -1, 7}), through(p, {2, 2, 2}), through(p, {-5, 1, 0})};
  auto g = common_point(many);
  REQUIRE(g.status == PointFit::Status::point);
  CHECK((g.point - p).norm() < 1e-9);
}

TEST_CASE("common plane") {
  LineConfig xz;
  for (auto [x, y] : {std::pair{0.0, 0.0}, {1.0, 2.0}, {-3.0, 0.5}, {2.0, -1.0}}) xz.push_back({x, 0, y, 0});
  auto f = common_plane(xz);
  REQUIRE(f.found());
  CHECK(std::abs(std::abs(f.plane->normal.y()) - 1) < 1e-12);
  CHECK(std::abs(f.plane->offset) < 1e-12);
  CHECK(f.plane->is_vertical());
  CHECK_FALSE(f.plane->slope_form());
  for (const auto& l : xz) CHECK(f.plane->contains(l));

  auto rng = make_rng(3);
  for (int i = 0; i < 50; ++i) {
    Point3 p(uniform_real(rng, -3, 3), uniform_real(rng, -3, 3), 0.5);
    LineConfig pair{through(p, p + Point3(1, 2, 1)), through(p, p + Point3(-2, 1, 3))};
    auto h = common_plane(pair);
    REQUIRE(h.found());
    for (const auto& l : pair) CHECK(h.plane->contains(l, 1e-9));
  }
  LineConfig skew{{0, 0, 0, 0}, {1, 0, 0, 1}};
  CHECK_FALSE(common_plane(skew).found());

  auto slope = Plane::from_slope(0.5, -2, 3);
  auto sf = slope.slope_form();
  REQUIRE(sf);
  CHECK((*sf - Point3(0.5, -2, 3)).norm() < 1e-12);
}

TEST_CASE("classify triples") {
  Line o1{0, 0, 0, 0}, o2{0, 0, 1, 0}, o3{0, 0, 0, 1};
  auto c = classify_triple(o1, o2, o3);
  CHECK(c.kind == TripleKind::concurrent_only);
  CHECK(c.family_dim == 2);
  REQUIRE(c.point);
  CHECK(c.point->norm() < 1e-12);

  // Plane y = 0, pairwise meeting at three distinct points.
  Line p1{0, 0, 1, 0}, p2{1, 0, -1, 0}, p3{3, 0, 0, 0};
  auto d = classify_triple(p1, p2, p3);
  CHECK(d.kind == TripleKind::coplanar_only);
  CHECK(d.family_dim == 2);

  // Concurrent and coplanar: three lines of y = 0 through the origin.
  auto e = classify_triple({0, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, -2, 0});
  CHECK(e.kind == TripleKind::concurrent_and_coplanar);
  CHECK(e.family_dim == 2);

  auto f = classify_triple({0, 0, 0, 0}, {1, 0, 0, 1}, {0, 1, -1, 0});
  CHECK(f.kind == TripleKind::pairwise_skew);
  CHECK(f.family_dim == 1);

  // l1 meets l2; l3 skew to both.
  auto g = classify_triple({0, 0, 0, 0}, {0, 0, 1, 0}, {1, 1, 1, -1});
  CHECK(g.kind == TripleKind::two_concurrent_mixed);
  CHECK(g.family_dim == 1);

  CHECK_THROWS_AS(classify_triple(o1, o1, o2), std::domain_error);
  CHECK(triple_kind_name(TripleKind::pairwise_skew) == "pairwise_skew");
}

TEST_CASE("transversals") {
  Line o1{0, 0, 0, 0}, o2{0, 0, 1, 0}, o3{0, 0, 0, 1};
  Line q{2, 1, 1, -1};
  auto t = transversal(o1, o2, q, 0.7);
  REQUIRE(t.line);
  CHECK(std::abs(meet_residual(*t.line, o1)) < 1e-9);
  CHECK(std::abs(meet_residual(*t.line, o2)) < 1e-9);
  CHECK(std::abs(meet_residual(*t.line, q)) < 1e-9);

  // Concurrent triple: the transversal through q = l3(s) passes through the
  // common point, here it is l3 itself.
  auto c = transversal(o1, o2, o3, 1.0);
  if (c.line) CHECK(std::abs(meet_residual(*c.line, o3)) < 1e-9);

  auto rng = make_rng(4);
  int built = 0;
  for (int i = 0; i < 500; ++i) {
    Line a = random_line(rng), b = random_line(rng), d = random_line(rng);
    auto r = transversal(a, b, d, uniform_real(rng, -2, 2));
    if (!r.line) continue;
    ++built;
    for (const auto& l : {a, b, d}) CHECK(std::abs(meet_residual(*r.line, l)) <= 1e-9 * pair_scale(*r.line, l));
  }
  CHECK(built > 450);

  // q on l1: degenerate.
  Line l1{0, 0, 0, 0}, l2{1, 0, 0, 1}, l3{0, 0, 1, 0};
  auto deg = transversal(l1, l2, l3, 0.0);
  CHECK_FALSE(deg.line);
  CHECK(deg.reason == TransversalFailure::point_on_first);
}

TEST_CASE("line through two points") {
  auto a = line_through({0, 0, 0}, {0, 0, 1});
  REQUIRE(a);
  CHECK(*a == Line{0, 0, 0, 0});
  auto b = line_through({1, 0, 0}, {1, 1, 1});
  REQUIRE(b);
  CHECK(*b == Line{1, 0, 0, 1});
  CHECK_FALSE(line_through({0, 0, 1}, {1, 0, 1}));
  CHECK_THROWS_AS(line_through({1, 1, 1}, {1, 1, 1}), std::domain_error);
}

TEST_CASE("exact constructions agree with floating ones") {
  auto rng = make_rng(5);
  for (int i = 0; i < 200; ++i) {
    auto draw = [&] { return Rational(static_cast<long>(uniform_int(rng, -9, 9))); };
    ExactLine a{draw(), draw(), draw(), draw()}, b{draw(), draw(), draw(), draw()}, c{draw(), draw(), draw(), draw()};
    Rational s(static_cast<long>(uniform_int(rng, -5, 5)), 3);
    s.canonicalize();
    auto ex = exact_transversal(a, b, c, s);
    auto fl = transversal(a.to_double(), b.to_double(), c.to_double(), s.get_d());
    if (!ex) continue;
    CHECK(exact_meet_residual(*ex, a) == 0);
    CHECK(exact_meet_residual(*ex, b) == 0);
    CHECK(exact_meet_residual(*ex, c) == 0);
    if (fl.line) {
      auto e = ex->to_double();
      CHECK(std::abs(e.a - fl.line->a) <= 1e-6 * (1 + std::abs(e.a)));
      CHECK(std::abs(e.d - fl.line->d) <= 1e-6 * (1 + std::abs(e.d)));
    }
    CHECK(exact_meet_residual(a, b).get_d() == doctest::Approx(meet_residual(a.to_double(), b.to_double())));
  }
  auto l = exact_line_through({1, 0, 0}, {1, 1, 1});
  REQUIRE(l);
  CHECK(*l == ExactLine{1, 0, 0, 1});
  CHECK_FALSE(exact_line_through({0, 0, 1}, {1, 0, 1}));
}
