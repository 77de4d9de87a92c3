#include "rigidlines/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Geometry>

#include "rigidlines/connectivity.hpp"
#include "rigidlines/errors.hpp"
#include "rigidlines/random.hpp"
#include "rigidlines/sampler.hpp"
#include "rigidlines/sparsity.hpp"

namespace rigidlines {

namespace {

constexpr std::size_t kMaxListedFailures = 100;

int pick(int value, int fallback) { return value > 0 ? value : fallback; }

std::string str(const auto&... parts) {
  std::ostringstream os;
  (os << ... << parts);
  return os.str();
}

double real(Rng& rng, double box = 5.0) { return uniform_real(rng, -box, box); }

Point3 random_point(Rng& rng) { return {real(rng), real(rng), real(rng)}; }

Line random_line(Rng& rng) { return {real(rng), real(rng), real(rng), real(rng)}; }

Plane random_plane(Rng& rng, bool allow_vertical) {
  // Nearly horizontal planes hold only nearly horizontal lines.
  Plane pl;
  Point3 normal = Point3::UnitZ();
  while (std::abs(normal.z()) > 0.9) {
    normal = Point3{real(rng), real(rng), real(rng)}.normalized();
    if (allow_vertical && uniform_int(rng, 0, 9) == 0) normal = Point3{normal.x(), normal.y(), 0.0}.normalized();
  }
  pl.normal = normal;
  pl.offset = real(rng);
  return pl;
}

Point3 point_in_plane(const Plane& pl, Rng& rng) {
  const Point3& nrm = pl.normal;
  if (std::abs(nrm.z()) > 1e-9) {
    const double x = real(rng), y = real(rng);
    return {x, y, (pl.offset - nrm.x() * x - nrm.y() * y) / nrm.z()};
  }
  const Eigen::Vector2d h{nrm.x(), nrm.y()};
  const Eigen::Vector2d foot = pl.offset * h / h.squaredNorm();
  const double s = real(rng);
  return {foot.x() - s * h.y(), foot.y() + s * h.x(), real(rng)};
}

Line line_in_plane(const Plane& pl, Rng& rng) {
  for (;;) {
    const Point3 p = point_in_plane(pl, rng), q = point_in_plane(pl, rng);
    if ((p - q).norm() < 1e-3) continue;
    if (auto l = line_through(p, q); l && l->max_abs() < 1e3) return *l;
  }
}

Line line_through_point(const Point3& p, Rng& rng) {
  for (;;) {
    Point3 q = random_point(rng);
    if (std::abs(q.z() - p.z()) < 0.1) continue;
    return *line_through(p, q);
  }
}

Line line_through_point_in_plane(const Point3& p, const Plane& pl, Rng& rng) {
  for (;;) {
    const Point3 dir = pl.normal.cross(random_point(rng));
    if (std::abs(dir.z()) < 0.05 * dir.norm()) continue;
    return *line_through(p, p + dir / dir.z());
  }
}

double config_scale(std::span<const Line> lines) {
  double s = 0;
  for (const auto& l : lines) s = std::max(s, l.max_abs());
  return 1.0 + s;
}

bool pairwise_distinct(std::span<const Line> lines, double rel) {
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = i + 1; j < lines.size(); ++j)
      if (lines_coincide(lines[i], lines[j], rel)) return false;
  return true;
}

std::int64_t sq_dist(const IntPoint2& a, const IntPoint2& b) {
  const std::int64_t dx = a.x - b.x, dy = a.y - b.y;
  return dx * dx + dy * dy;
}

double point_scale(std::span<const Point2> a, std::span<const Point2> b) {
  double s = 0;
  for (const auto& p : a) s = std::max(s, p.cwiseAbs().maxCoeff());
  for (const auto& p : b) s = std::max(s, p.cwiseAbs().maxCoeff());
  return 1.0 + s;
}

// Random flexible graph for the converse suite, cycling through three
// families: cycles, spanning trees plus a few chords, Laman minus an edge.
NamedGraph flexible_graph(int index, int n_max, std::uint64_t seed) {
  Rng rng = make_rng(seed);
  const int n = static_cast<int>(uniform_int(rng, 4, std::max(4, n_max)));
  switch (index % 3) {
    case 0: return {str("cycle(", n, ")"), cycle_graph(n)};
    case 1: {
      std::vector<Edge> edges;
      for (int v = 1; v < n; ++v) edges.push_back(make_edge(v, static_cast<int>(uniform_int(rng, 0, v - 1))));
      const int chords = static_cast<int>(uniform_int(rng, 0, n - 3));
      for (int k = 0; k < 50 * n && static_cast<int>(edges.size()) < n - 1 + chords; ++k) {
        Edge e = make_edge(static_cast<int>(uniform_int(rng, 0, n - 1)), static_cast<int>(uniform_int(rng, 0, n - 1)));
        if (e.first != e.second && std::find(edges.begin(), edges.end(), e) == edges.end()) edges.push_back(e);
      }
      return {str("tree_plus_edges(n=", n, ", m=", edges.size(), ")"), Graph(n, std::move(edges))};
    }
    default: {
      Graph g = laman_random(n, seed);
      const auto& e = g.edges()[uniform_int(rng, 0, g.m() - 1)];
      return {str("laman_minus_edge(n=", n, ")"), g.without_edge(e.first, e.second)};
    }
  }
}

Graph star_graph_on_fourth() { return Graph(4, {{0, 3}, {1, 3}, {2, 3}}); }

}  // namespace

void SuiteReport::record(bool pass, const std::string& instance, std::uint64_t seed, const std::string& detail) {
  ++total;
  if (pass) {
    ++passed;
  } else if (failures.size() < kMaxListedFailures) {
    failures.push_back({instance, seed, detail});
  }
}

Json suite_to_json(const SuiteReport& r) {
  Json fails = Json::array();
  for (const auto& f : r.failures) fails.push_back({{"instance", f.instance}, {"seed", f.seed}, {"detail", f.detail}});
  return Json{{"suite", r.suite}, {"passed", r.passed}, {"total", r.total},
              {"ok", r.ok()},     {"stats", r.stats},   {"failures", fails}};
}

std::string suite_to_text(const SuiteReport& r) {
  std::ostringstream os;
  os << r.suite << ": " << r.passed << "/" << r.total << (r.ok() ? " passed" : " FAILED") << "\n";
  for (const auto& [k, v] : r.stats.items()) os << "  " << k << ": " << v.dump() << "\n";
  for (const auto& f : r.failures) os << "  fail " << f.instance << " seed=" << f.seed << ": " << f.detail << "\n";
  if (static_cast<int>(r.failures.size()) < r.total - r.passed)
    os << "  (" << (r.total - r.passed - static_cast<int>(r.failures.size())) << " more failures not listed)\n";
  return os.str();
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"theorem-main", "theorem-mainnec", "lemma-complete", "lemma-3lines",
                                              "lemma-cong",   "four-lines",      "hendrickson-oracle"};
  return names;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& opts) {
  if (name == "theorem-main") return verify_theorem_main(opts);
  if (name == "theorem-mainnec") return verify_theorem_mainnec(opts);
  if (name == "lemma-complete") return verify_lemma_complete(opts);
  if (name == "lemma-3lines") return verify_lemma_3lines(opts);
  if (name == "lemma-cong") return verify_lemma_cong(opts);
  if (name == "four-lines") return verify_four_lines(opts);
  if (name == "hendrickson-oracle") return verify_hendrickson_oracle(opts);
  throw std::invalid_argument("unknown suite '" + name + "'");
}

SuiteReport verify_theorem_main(const SuiteOptions& opts) {
  SuiteReport rep{"theorem-main"};
  const int count = pick(opts.count, 50);
  const int n_max = std::max(2, pick(opts.n_max, 10));
  int attempts = 0, exact_ok = 0, float_ok = 0;
  for (int k = 0; k < count; ++k) {
    const std::uint64_t s = derive_seed(opts.seed, static_cast<std::uint64_t>(k));
    const int n = 2 + static_cast<int>(s % static_cast<std::uint64_t>(n_max - 1));
    const Graph g = laman_random(n, s);
    const std::string inst = str("laman_random(", n, ", ", s, ")");
    try {
      const LamanSample fl = sample_laman_lines_report(g, s);
      attempts += fl.attempts;
      const double worst = g.m() ? line_system_relative_residuals(g, fl.lines).cwiseAbs().maxCoeff() : 0.0;
      const DimensionReport frep = line_system_dimension(g, fl.lines, opts.tol);
      const DimensionReport xrep = line_system_dimension_exact(g, sample_laman_lines_exact(g, s));
      const bool f = frep.certified && frep.local_dim == 2 * n + 3 && worst <= 1e-10;
      const bool x = xrep.certified && xrep.jacobian_rank == 2 * n - 3 && xrep.local_dim == 2 * n + 3;
      float_ok += f;
      exact_ok += x;
      rep.record(f && x, inst, s,
                 str("floating rank ", frep.jacobian_rank, ", exact rank ", xrep.jacobian_rank, ", expected ", 2 * n - 3,
                     ", residual ", worst));
    } catch (const std::exception& e) {
      rep.record(false, inst, s, e.what());
    }
  }
  rep.stats = {{"exact_certified", exact_ok},
               {"floating_certified", float_ok},
               {"sampling_attempts", attempts},
               {"retry_rate", count ? static_cast<double>(attempts - count) / attempts : 0.0}};
  return rep;
}

SuiteReport verify_theorem_mainnec(const SuiteOptions& opts) {
  SuiteReport rep{"theorem-mainnec"};
  const int count = pick(opts.count, 20);
  const int n_max = pick(opts.n_max, 10);
  for (int k = 0; k < count; ++k) {
    const std::uint64_t s = derive_seed(opts.seed, static_cast<std::uint64_t>(k));
    const NamedGraph ng = flexible_graph(k, n_max, s);
    const Graph& g = ng.graph;
    const int n = g.n();
    try {
      if (sparsity_rank(g).rank >= 2 * n - 3) throw InvariantViolation("generated graph is not flexible");
      const CongruentPair pair = sample_congruent_pair(g, k % 2 ? -1 : 1, s);
      bool equal_lengths = true;
      const std::int64_t d2 = pair.denominator * pair.denominator;
      for (auto [i, j] : g.edges())
        equal_lengths &= d2 * sq_dist(pair.p_int[i], pair.p_int[j]) == sq_dist(pair.p_prime_scaled[i], pair.p_prime_scaled[j]);
      const DimensionReport frep = pair_system_dimension(g, pair.p, pair.p_prime, opts.tol);
      const int exact_rank = rank_exact(pair_system_jacobian_int(g, pair), s);
      const bool pass = equal_lengths && frep.local_dim >= 2 * n + 4 && 4 * n - exact_rank >= 2 * n + 4 &&
                        exact_rank == frep.jacobian_rank;
      rep.record(pass, ng.name, s,
                 str("floating rank ", frep.jacobian_rank, ", exact rank ", exact_rank, ", local dim ", frep.local_dim,
                     ", bound ", 2 * n + 4, equal_lengths ? "" : ", edge lengths differ"));
    } catch (const std::exception& e) {
      rep.record(false, ng.name, s, e.what());
    }
  }
  return rep;
}

IntMatrix concurrent_family_jacobian(std::span<const std::int64_t> params) {
  // params = (x, y, z, c_1, d_1, ..., c_n, d_n); a_i = x - c_i z, b_i = y - d_i z.
  const int n = static_cast<int>(params.size() - 3) / 2;
  const std::int64_t z = params[2];
  IntMatrix jac = IntMatrix::Zero(4 * n, 2 * n + 3);
  for (int i = 0; i < n; ++i) {
    const std::int64_t c = params[3 + 2 * i], d = params[4 + 2 * i];
    const int ci = 3 + 2 * i, di = 4 + 2 * i;
    jac(4 * i, 0) = 1;
    jac(4 * i, 2) = -c;
    jac(4 * i, ci) = -z;
    jac(4 * i + 1, 1) = 1;
    jac(4 * i + 1, 2) = -d;
    jac(4 * i + 1, di) = -z;
    jac(4 * i + 2, ci) = 1;
    jac(4 * i + 3, di) = 1;
  }
  return jac;
}

IntMatrix parallel_family_jacobian(int n) {
  // params = (c, d, a_1, b_1, ..., a_n, b_n).
  IntMatrix jac = IntMatrix::Zero(4 * n, 2 * n + 2);
  for (int i = 0; i < n; ++i) {
    jac(4 * i, 2 + 2 * i) = 1;
    jac(4 * i + 1, 3 + 2 * i) = 1;
    jac(4 * i + 2, 0) = 1;
    jac(4 * i + 3, 1) = 1;
  }
  return jac;
}

IntMatrix coplanar_family_jacobian(std::span<const std::int64_t> params) {
  // params = (lambda, mu, nu, a_1, c_1, ..., a_n, c_n) for the plane
  // z = lambda x + mu y + nu; b_i = -(lambda a_i + nu) / mu and
  // d_i = (1 - lambda c_i) / mu. Rows are multiplied by mu^2.
  const int n = static_cast<int>(params.size() - 3) / 2;
  const std::int64_t lam = params[0], mu = params[1], nu = params[2];
  if (mu == 0) throw std::domain_error("coplanar parametrization needs mu != 0");
  const std::int64_t mu2 = mu * mu;
  IntMatrix jac = IntMatrix::Zero(4 * n, 2 * n + 3);
  for (int i = 0; i < n; ++i) {
    const std::int64_t a = params[3 + 2 * i], c = params[4 + 2 * i];
    const int ai = 3 + 2 * i, ci = 4 + 2 * i;
    jac(4 * i, ai) = mu2;
    jac(4 * i + 1, 0) = -a * mu;
    jac(4 * i + 1, 1) = lam * a + nu;
    jac(4 * i + 1, 2) = -mu;
    jac(4 * i + 1, ai) = -lam * mu;
    jac(4 * i + 2, ci) = mu2;
    jac(4 * i + 3, 0) = -c * mu;
    jac(4 * i + 3, 1) = -(1 - lam * c);
    jac(4 * i + 3, ci) = -lam * mu;
  }
  return jac;
}

SuiteReport verify_lemma_complete(const SuiteOptions& opts) {
  SuiteReport rep{"lemma-complete"};
  const int count = pick(opts.count, 20);
  const int n_max = std::max(2, pick(opts.n_max, 10));
  for (int n = 2; n <= n_max; ++n)
    for (int kind = 0; kind < 3; ++kind)
      for (int k = 0; k < count; ++k) {
        const std::uint64_t s = derive_seed(opts.seed, static_cast<std::uint64_t>((n * 3 + kind) * 100000 + k));
        Rng rng = make_rng(s);
        auto r = [&] { return static_cast<std::int64_t>(uniform_int(rng, -50, 50)); };
        std::vector<std::int64_t> params(kind == 1 ? 2 : 3);
        for (auto& v : params) v = r();
        if (kind == 2)
          while (params[1] == 0) params[1] = r();
        for (int i = 0; i < n; ++i) params.insert(params.end(), {r(), r()});
        IntMatrix jac = kind == 0 ? concurrent_family_jacobian(params)
                        : kind == 1 ? parallel_family_jacobian(n)
                                    : coplanar_family_jacobian(params);
        const int expected = static_cast<int>(jac.cols());
        const int exact_rank = rank_exact(jac, s);
        Eigen::MatrixXd fjac = jac.cast<double>();
        fjac = fjac.rowwise().normalized();
        const int float_rank = numeric_rank(fjac, opts.tol);
        static const char* kNames[] = {"concurrent", "parallel", "coplanar"};
        rep.record(exact_rank == expected && float_rank == expected, str(kNames[kind], "(n=", n, ")"), s,
                   str("exact rank ", exact_rank, ", floating rank ", float_rank, ", parameters ", expected));
      }
  return rep;
}

TransversalFamilyDim transversal_family_dimension(const Line& l1, const Line& l2, const Line& l3, std::uint64_t seed) {
  const Graph star = star_graph_on_fourth();
  const std::vector<bool> fixed{true, true, true, false};
  Rng rng = make_rng(seed);
  std::normal_distribution<double> gauss;
  TransversalFamilyDim out;
  for (int attempt = 0; attempt < 50; ++attempt) {
    LineConfig cfg{l1, l2, l3, random_line(rng)};
    try {
      cfg = gauss_newton_project(star, cfg, 1e-13, 100, fixed).lines;
    } catch (const NonConvergence&) {
      continue;
    }
    const Line base = cfg[3];
    if (base.max_abs() > 1e3 || lines_coincide(base, l1, 1e-3) || lines_coincide(base, l2, 1e-3) ||
        lines_coincide(base, l3, 1e-3))
      continue;

    const Eigen::MatrixXd jac = line_system_jacobian(star, cfg).rightCols(4);
    const int jdim = 4 - numeric_rank(jac, kDefaultTol);

    constexpr int kCloud = 12;
    const double eps = 1e-4 * (1.0 + base.max_abs());
    Eigen::MatrixXd disp(kCloud, 4);
    bool ok = true;
    int rows = 0;
    for (int draw = 0; rows < kCloud && ok; ++draw) {
      if (draw == 4 * kCloud) {
        ok = false;
        break;
      }
      Eigen::Vector4d step(gauss(rng), gauss(rng), gauss(rng), gauss(rng));
      step *= eps;
      LineConfig pert = cfg;
      Line& l = pert[3];
      l.a += step(0);
      l.b += step(1);
      l.c += step(2);
      l.d += step(3);
      try {
        const Line p = gauss_newton_project(star, pert, 1e-13, 100, fixed).lines[3];
        const Eigen::Vector4d d(p.a - base.a, p.b - base.b, p.c - base.c, p.d - base.d);
        // A projection that lands far away samples the family globally, not
        // its tangent directions at the base.
        if (d.norm() > 10 * step.norm()) continue;
        disp.row(rows++) = d.transpose();
      } catch (const NonConvergence&) {
        ok = false;
      }
    }
    if (!ok) continue;
    out.base = base;
    out.jacobian_dim = jdim;
    out.cloud_dim = numeric_rank(disp, 1e-3);
    return out;
  }
  throw SamplingError("transversal_family_dimension: no usable member found", {});
}

SuiteReport verify_lemma_3lines(const SuiteOptions& opts) {
  SuiteReport rep{"lemma-3lines"};
  const int count = pick(opts.count, 100);
  const TripleKind kinds[] = {TripleKind::concurrent_and_coplanar, TripleKind::concurrent_only,
                              TripleKind::coplanar_only, TripleKind::two_concurrent_mixed, TripleKind::pairwise_skew};
  Json per_class = Json::object();
  for (TripleKind kind : kinds) {
    int ok = 0;
    for (int k = 0; k < count; ++k) {
      const std::uint64_t s = derive_seed(opts.seed, static_cast<std::uint64_t>(static_cast<int>(kind) * 1000003 + k));
      Rng rng = make_rng(s);
      Line l[3];
      const Point3 p = random_point(rng);
      const Plane pl = random_plane(rng, false);
      switch (kind) {
        case TripleKind::concurrent_and_coplanar: {
          Plane through = pl;
          through.offset = pl.normal.dot(p);
          for (auto& x : l) x = line_through_point_in_plane(p, through, rng);
          break;
        }
        case TripleKind::concurrent_only:
          for (auto& x : l) x = line_through_point(p, rng);
          break;
        case TripleKind::coplanar_only:
          for (auto& x : l) x = line_in_plane(pl, rng);
          break;
        case TripleKind::two_concurrent_mixed:
          l[0] = line_through_point(p, rng);
          l[1] = line_through_point(p, rng);
          l[2] = random_line(rng);
          break;
        case TripleKind::pairwise_skew:
          for (auto& x : l) x = random_line(rng);
          break;
      }
      const std::string inst = str(triple_kind_name(kind), "#", k);
      try {
        const TripleClass cls = classify_triple(l[0], l[1], l[2], opts.tol);
        const int expected = (kind == TripleKind::two_concurrent_mixed || kind == TripleKind::pairwise_skew) ? 1 : 2;
        const TransversalFamilyDim dim = transversal_family_dimension(l[0], l[1], l[2], derive_seed(s, 1));
        const bool pass = cls.kind == kind && cls.family_dim == expected && dim.jacobian_dim == expected &&
                          dim.cloud_dim == expected;
        ok += pass;
        rep.record(pass, inst, s,
                   str("classified ", triple_kind_name(cls.kind), " (dim ", cls.family_dim, "), jacobian dim ",
                       dim.jacobian_dim, ", cloud dim ", dim.cloud_dim, ", expected ", expected));
      } catch (const std::exception& e) {
        rep.record(false, inst, s, e.what());
      }
    }
    per_class[triple_kind_name(kind)] = ok;
  }
  rep.stats = {{"passed_per_class", per_class}};
  return rep;
}

SuiteReport verify_lemma_cong(const SuiteOptions& opts) {
  SuiteReport rep{"lemma-cong"};
  const int count = pick(opts.count, 100000);
  const double tol = 1e-9;
  int forced_equal = 0;
  double worst_rotation = 0, worst_reflection = 0, worst_collinear = 0;

  // Exact distance/incidence equivalence on integer points, half of the
  // instances forced to equal distance through a lattice symmetry.
  for (int k = 0; k < count; ++k) {
    const std::uint64_t s = derive_seed(opts.seed, static_cast<std::uint64_t>(k));
    Rng rng = make_rng(s);
    auto r = [&] { return static_cast<std::int64_t>(uniform_int(rng, -1000, 1000)); };
    const IntPoint2 a{r(), r()}, b{r(), r()}, c{r(), r()};
    IntPoint2 d{r(), r()};
    if (k % 2 == 0) {
      std::int64_t wx = c.x - a.x, wy = c.y - a.y;
      const int sym = static_cast<int>(uniform_int(rng, 0, 7));
      if (sym & 1) wx = -wx;
      if (sym & 2) wy = -wy;
      if (sym & 4) std::swap(wx, wy);
      d = {b.x + wx, b.y + wy};
      ++forced_equal;
    }
    const std::int64_t g4 = exact_meet_residual_x4(to_doubled_line(a, b), to_doubled_line(c, d));
    const std::int64_t gap = sq_dist(b, d) - sq_dist(a, c);
    rep.record((gap == 0) == (g4 == 0) && g4 == gap, "distance-incidence#" + std::to_string(k), s,
               str("4g = ", g4, ", |bd|^2 - |ac|^2 = ", gap));

    IntPoint2 e{r(), r()};
    while (e.x == b.x && e.y == b.y) e = {r(), r()};
    const std::int64_t h4 = exact_meet_residual_x4(to_doubled_line(a, b), to_doubled_line(a, e));
    rep.record(h4 != 0, "no-intersection#" + std::to_string(k), s, "lines from a shared first point meet");
  }

  for (int k = 0; k < count; ++k) {
    const std::uint64_t s = derive_seed(opts.seed ^ 0xa5a5a5a5ULL, static_cast<std::uint64_t>(k));
    Rng rng = make_rng(s);
    const int m = static_cast<int>(uniform_int(rng, 3, 6));

    // Concurrent lines: rotation about the common point.
    {
      const Point3 tau = random_point(rng);
      LineConfig lines;
      for (int i = 0; i < m; ++i) lines.push_back(line_through_point(tau, rng));
      Embedding a, b;
      for (const auto& l : lines) {
        PointPair pp = from_line(l);
        a.push_back(pp.a);
        b.push_back(pp.b);
      }
      const PointFit fit = common_point(lines, opts.tol);
      const double scale = point_scale(a, b);
      double err = 0;
      if (fit.status == PointFit::Status::point) {
        const Rotation rot = rotation_at(fit.point);
        for (int i = 0; i < m; ++i) err = std::max(err, (rot.apply(a[i]) - b[i]).norm());
      }
      const PlanarMotion mot = recover_motion(a, b, 1, tol);
      worst_rotation = std::max(worst_rotation, err / scale);
      rep.record(fit.status == PointFit::Status::point && err <= tol * scale && mot.residual <= tol * scale,
                 "rotation#" + std::to_string(k), s, str("rotation error ", err, ", procrustes residual ", mot.residual));
    }

    // Coplanar lines: orientation-reversing motion.
    {
      const Plane pl = random_plane(rng, true);
      LineConfig lines;
      for (int i = 0; i < m; ++i) lines.push_back(line_in_plane(pl, rng));
      Embedding a, b;
      for (const auto& l : lines) {
        PointPair pp = from_line(l);
        a.push_back(pp.a);
        b.push_back(pp.b);
      }
      const double scale = point_scale(a, b);
      bool pass = common_plane(lines, opts.tol).found();
      double res = -1;
      try {
        res = recover_motion(a, b, -1, tol).residual;
        pass = pass && res <= tol * scale;
      } catch (const NonCongruentError&) {
        pass = false;
      }
      worst_reflection = std::max(worst_reflection, res / scale);
      rep.record(pass, "reflection#" + std::to_string(k), s, str("procrustes residual ", res));
    }

    // Concurrent and coplanar lines: both point sets collinear; and the
    // converse from a collinear congruent pair.
    {
      const Point3 tau = random_point(rng);
      Plane pl = random_plane(rng, false);
      pl.offset = pl.normal.dot(tau);
      LineConfig lines;
      for (int i = 0; i < m; ++i) lines.push_back(line_through_point_in_plane(tau, pl, rng));
      Embedding a, b;
      for (const auto& l : lines) {
        PointPair pp = from_line(l);
        a.push_back(pp.a);
        b.push_back(pp.b);
      }
      const double res = std::max(collinearity_residual(a), collinearity_residual(b));
      worst_collinear = std::max(worst_collinear, res);

      const CongruentPair pair = sample_congruent_pair(m, k % 2 ? -1 : 1, derive_seed(s, 7), true);
      const LineConfig img = phi(pair.p, pair.p_prime);
      const bool both = common_point(img, opts.tol).found() && common_plane(img, opts.tol).found();
      rep.record(res <= tol && both, "collinear#" + std::to_string(k), s,
                 str("collinearity residual ", res, both ? "" : ", image of a collinear pair is not a planar pencil"));
    }
  }
  rep.stats = {{"forced_equal_distance", forced_equal},
               {"worst_rotation_error", worst_rotation},
               {"worst_reflection_residual", worst_reflection},
               {"worst_collinearity_residual", worst_collinear}};
  return rep;
}

SuiteReport verify_four_lines(const SuiteOptions& opts) {
  SuiteReport rep{"four-lines"};
  const int count = pick(opts.count, 10000);
  const Graph k4 = complete_graph(4);
  int concurrent = 0, parallel = 0, coplanar = 0, resampled = 0;
  double worst = 0;
  for (int k = 0; k < count; ++k) {
    const std::uint64_t s = derive_seed(opts.seed, static_cast<std::uint64_t>(k));
    Rng rng = make_rng(s);
    std::optional<LineConfig> quad;
    for (int attempt = 0; attempt < 20 && !quad; ++attempt) {
      LineConfig x0;
      for (int i = 0; i < 4; ++i) x0.push_back(random_line(rng));
      try {
        Projection p = gauss_newton_project(k4, x0, 1e-13, 100);
        if (config_scale(p.lines) < 1e3 && pairwise_distinct(p.lines, 1e-3)) quad = std::move(p.lines);
      } catch (const NonConvergence&) {
      }
      if (!quad) ++resampled;
    }
    const std::string inst = "quadruple#" + std::to_string(k);
    if (!quad) {
      rep.record(false, inst, s, "no distinct pairwise-meeting quadruple found");
      continue;
    }
    const double meet = line_system_relative_residuals(k4, *quad).cwiseAbs().maxCoeff();
    const PointFit pf = common_point(*quad, opts.tol);
    const PlaneFit qf = common_plane(*quad, opts.tol);
    double res = 1.0;
    if (pf.found()) res = pf.residual;
    if (qf.found()) res = std::min(res, qf.residual);
    concurrent += pf.status == PointFit::Status::point;
    parallel += pf.status == PointFit::Status::parallel_family;
    coplanar += qf.found();
    worst = std::max(worst, (pf.found() || qf.found()) ? res : 0.0);
    rep.record(meet <= opts.tol && (pf.found() || qf.found()) && res <= opts.tol, inst, s,
               str("incidence residual ", meet, ", point residual ", pf.residual, ", plane residual ", qf.residual));
  }
  rep.stats = {{"concurrent", concurrent},
               {"parallel", parallel},
               {"coplanar", coplanar},
               {"resampled", resampled},
               {"worst_fit_residual", worst}};
  return rep;
}

SuiteReport verify_hendrickson_oracle(const SuiteOptions& opts) {
  SuiteReport rep{"hendrickson-oracle"};
  const int n_max = pick(opts.n_max, 8);
  const int trials = pick(opts.oracle_trials, 5);
  int hendrickson = 0, flexible = 0, skipped = 0;
  for (const auto& [name, g] : standard_catalog(n_max, opts.seed)) {
    if (g.n() < 4) {
      ++skipped;
      continue;
    }
    const std::uint64_t s = derive_seed(opts.seed, std::hash<std::string>{}(name));
    const bool hen = is_hendrickson(g);
    hendrickson += hen;
    if (!is_rigid_numeric(g, 3, s, true)) {
      ++flexible;
      rep.record(!hen, name, s, "flexible graph classified as Hendrickson");
      continue;
    }
    const std::vector<bool> verdicts = global_rigidity_trials(g, trials, s);
    const auto agree = std::count(verdicts.begin(), verdicts.end(), hen);
    rep.record(agree == trials, name, s,
               str("is_hendrickson=", hen ? "true" : "false", ", oracle agreed in ", agree, "/", trials, " trials"));
  }
  rep.stats = {{"hendrickson", hendrickson}, {"flexible", flexible}, {"skipped_small", skipped}};
  return rep;
}

}  // namespace rigidlines
