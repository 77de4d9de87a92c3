#include "rigidlines/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/QR>

#include "rigidlines/errors.hpp"
#include "rigidlines/henneberg.hpp"
#include "rigidlines/random.hpp"
#include "rigidlines/sparsity.hpp"

namespace rigidlines {

namespace {

constexpr long long kBox = 9;

Rational rand_q(Rng& rng, long long box = kBox) { return Rational(static_cast<long>(uniform_int(rng, -box, box))); }

ExactLine random_exact_line(Rng& rng) { return {rand_q(rng), rand_q(rng), rand_q(rng), rand_q(rng)}; }

bool is_new(const ExactLineConfig& lines, const ExactLine& l) {
  return std::none_of(lines.begin(), lines.end(), [&](const ExactLine& o) { return o == l; });
}

double max_relative_residual(const Graph& g, const LineConfig& x) {
  if (g.m() == 0) return 0.0;
  return line_system_relative_residuals(g, x).cwiseAbs().maxCoeff();
}

}  // namespace

Projection gauss_newton_project(const Graph& g, const LineConfig& x0, double tol, int max_iter,
                                const std::vector<bool>& fixed) {
  if (static_cast<int>(x0.size()) != g.n()) throw std::invalid_argument("line count does not match graph");
  if (!fixed.empty() && fixed.size() != x0.size()) throw std::invalid_argument("fixed mask has the wrong size");
  std::vector<int> free_cols;
  for (int i = 0; i < g.n(); ++i)
    if (fixed.empty() || !fixed[i])
      for (int k = 0; k < 4; ++k) free_cols.push_back(4 * i + k);

  Projection out{x0, 0, max_relative_residual(g, x0)};
  while (out.residual > tol) {
    if (out.iterations == max_iter || !std::isfinite(out.residual)) throw NonConvergence(out.residual, out.iterations);
    const Eigen::MatrixXd full = line_system_jacobian(g, out.lines);
    Eigen::MatrixXd jac(full.rows(), static_cast<Eigen::Index>(free_cols.size()));
    for (std::size_t k = 0; k < free_cols.size(); ++k) jac.col(static_cast<Eigen::Index>(k)) = full.col(free_cols[k]);
    const Eigen::VectorXd step = jac.completeOrthogonalDecomposition().solve(-line_system_residuals(g, out.lines));
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
      Line& l = out.lines[free_cols[k] / 4];
      const double s = step(static_cast<Eigen::Index>(k));
      switch (free_cols[k] % 4) {
        case 0: l.a += s; break;
        case 1: l.b += s; break;
        case 2: l.c += s; break;
        default: l.d += s; break;
      }
    }
    ++out.iterations;
    out.residual = max_relative_residual(g, out.lines);
  }
  return out;
}

ExactLineConfig sample_laman_lines_exact(const Graph& g, std::uint64_t seed, int max_retries) {
  if (!is_laman(g)) throw PreconditionError("sample_laman_lines: graph is not Laman");
  // Lines are added in Henneberg replay order, each meeting the lines of its
  // earlier neighbours in g itself. Edges that a later 1-extension removes
  // are never imposed, so no new line has to meet three pairwise-meeting
  // lines (that would need a K4 inside g).
  const ConstructionSequence seq = extract_henneberg(g);
  const int n = g.n();
  std::vector<std::string> log;
  for (int attempt = 0; attempt < max_retries; ++attempt) {
    Rng rng = make_rng(seed, static_cast<std::uint64_t>(attempt));
    ExactLineConfig lines;
    std::string failure;
    for (int i = 0; i < n && failure.empty(); ++i) {
      std::vector<int> nb;
      for (int j = 0; j < i; ++j)
        if (g.has_edge(seq.relabel[i], seq.relabel[j])) nb.push_back(j);
      if (nb.size() > 3) throw InvariantViolation("replay vertex with more than three earlier neighbours");
      std::optional<ExactLine> next;
      for (int k = 0; k < max_retries && !next; ++k) {
        std::optional<ExactLine> cand;
        if (nb.empty()) {
          cand = random_exact_line(rng);
        } else if (nb.size() == 1) {
          const ExactPoint3 p = exact_point_at(lines[nb[0]], rand_q(rng));
          const ExactPoint3 q{rand_q(rng), rand_q(rng), rand_q(rng)};
          if (!(p == q)) cand = exact_line_through(p, q);
        } else if (nb.size() == 2) {
          const Rational t1 = rand_q(rng), t2 = rand_q(rng);
          if (t1 != t2) cand = exact_line_through(exact_point_at(lines[nb[0]], t1), exact_point_at(lines[nb[1]], t2));
        } else {
          const int r = k % 3;
          cand = exact_transversal(lines[nb[r]], lines[nb[(r + 1) % 3]], lines[nb[(r + 2) % 3]], rand_q(rng));
        }
        if (cand && is_new(lines, *cand)) next = cand;
      }
      if (next)
        lines.push_back(*next);
      else
        failure = "vertex " + std::to_string(seq.relabel[i]) + ": no admissible line";
    }
    if (failure.empty()) {
      ExactLineConfig out(n);
      for (int i = 0; i < n; ++i) out[seq.relabel[i]] = lines[i];
      if (line_system_dimension_exact(g, out).certified) return out;
      failure = "rank-deficient draw";
    }
    log.push_back("exact attempt " + std::to_string(attempt) + ": " + failure);
  }
  throw SamplingError("sample_laman_lines_exact: no certified draw in " + std::to_string(max_retries) + " attempts",
                      log);
}

LamanSample sample_laman_lines_report(const Graph& g, std::uint64_t seed, int max_retries) {
  if (!is_laman(g)) throw PreconditionError("sample_laman_lines: graph is not Laman");
  LamanSample out;
  for (int attempt = 0; attempt < max_retries; ++attempt) {
    out.attempts = attempt + 1;
    const std::uint64_t sub = derive_seed(seed, static_cast<std::uint64_t>(attempt));
    std::ostringstream why;
    why << "attempt " << attempt << ": ";
    try {
      const ExactLineConfig base = sample_laman_lines_exact(g, sub, max_retries);
      Rng rng = make_rng(sub, 1);
      std::normal_distribution<double> gauss;
      LineConfig x0;
      for (const auto& l : base) {
        Line d = l.to_double();
        const double amp = 0.05 * (1.0 + d.max_abs());
        d.a += amp * gauss(rng);
        d.b += amp * gauss(rng);
        d.c += amp * gauss(rng);
        d.d += amp * gauss(rng);
        x0.push_back(d);
      }
      Projection proj = gauss_newton_project(g, x0, 1e-12, 50);
      bool distinct = true;
      for (int i = 0; i < g.n() && distinct; ++i)
        for (int j = i + 1; j < g.n() && distinct; ++j)
          if (lines_coincide(proj.lines[i], proj.lines[j], 1e-6)) distinct = false;
      if (!distinct) {
        why << "two lines coincide after projection";
      } else {
        DimensionReport rep = line_system_dimension(g, proj.lines, kDefaultTol);
        if (rep.certified) {
          out.lines = std::move(proj.lines);
          out.report = rep;
          return out;
        }
        why << "Jacobian rank " << rep.jacobian_rank << " < " << rep.constraint_count;
      }
    } catch (const NonConvergence& e) {
      why << e.what();
    } catch (const SamplingError& e) {
      why << e.what();
    }
    out.retry_log.push_back(why.str());
  }
  throw SamplingError("sample_laman_lines: no certified sample in " + std::to_string(max_retries) + " attempts",
                      out.retry_log);
}

LineConfig sample_laman_lines(const Graph& g, std::uint64_t seed, int max_retries) {
  return sample_laman_lines_report(g, seed, max_retries).lines;
}

std::string family_kind_name(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::concurrent: return "concurrent";
    case FamilyKind::parallel: return "parallel";
    case FamilyKind::coplanar: return "coplanar";
  }
  return "?";
}

FamilyKind parse_family_kind(const std::string& name) {
  if (name == "concurrent") return FamilyKind::concurrent;
  if (name == "parallel") return FamilyKind::parallel;
  if (name == "coplanar") return FamilyKind::coplanar;
  throw std::invalid_argument("unknown family kind '" + name + "' (expected concurrent, parallel or coplanar)");
}

LineConfig sample_knn(int n, FamilyKind kind, std::uint64_t seed) {
  if (n < 1) throw std::domain_error("sample_knn needs n >= 1");
  Rng rng = make_rng(seed);
  auto r = [&] { return static_cast<double>(uniform_int(rng, -kBox, kBox)); };
  LineConfig out;
  auto push_distinct = [&](const Line& l) {
    if (std::find(out.begin(), out.end(), l) == out.end()) out.push_back(l);
  };
  switch (kind) {
    case FamilyKind::concurrent: {
      const double x = r(), y = r(), z = r();
      while (static_cast<int>(out.size()) < n) {
        const double c = r(), d = r();
        push_distinct({x - c * z, y - d * z, c, d});
      }
      break;
    }
    case FamilyKind::parallel: {
      const double c = r(), d = r();
      while (static_cast<int>(out.size()) < n) push_distinct({r(), r(), c, d});
      break;
    }
    case FamilyKind::coplanar: {
      const double lam = r(), mu = r(), nu = r();
      while (static_cast<int>(out.size()) < n) {
        const double x1 = r(), y1 = r(), x2 = r(), y2 = r();
        const Point3 p{x1, y1, lam * x1 + mu * y1 + nu};
        const Point3 q{x2, y2, lam * x2 + mu * y2 + nu};
        if (p == q) continue;
        if (auto l = line_through(p, q)) push_distinct(*l);
      }
      break;
    }
  }
  return out;
}

CongruentPair sample_congruent_pair(int n, int orientation, std::uint64_t seed, bool collinear) {
  if (n < 1) throw std::domain_error("sample_congruent_pair needs n >= 1");
  if (orientation != 1 && orientation != -1) throw std::domain_error("orientation must be +1 or -1");
  Rng rng = make_rng(seed);
  CongruentPair out;
  out.orientation = orientation;
  if (collinear) {
    const IntPoint2 base{uniform_int(rng, -1000, 1000), uniform_int(rng, -1000, 1000)};
    IntPoint2 dir{0, 0};
    while (dir.x == 0 && dir.y == 0) dir = {uniform_int(rng, -20, 20), uniform_int(rng, -20, 20)};
    for (int i = 0; i < n; ++i) {
      const long long k = uniform_int(rng, -400, 400);
      out.p_int.push_back({base.x + k * dir.x, base.y + k * dir.y});
    }
  } else {
    out.p_int = random_int_embedding(n, rng);
  }

  // cos = (m^2 - k^2) / D, sin = 2mk / D with D = m^2 + k^2.
  const long long m = uniform_int(rng, -20, 20), k = uniform_int(rng, 1, 20);
  const std::int64_t cs = m * m - k * k, sn = 2 * m * k;
  out.denominator = m * m + k * k;
  const std::int64_t tx = uniform_int(rng, -1000, 1000), ty = uniform_int(rng, -1000, 1000);
  for (const auto& q : out.p_int) {
    const std::int64_t y = orientation * q.y;
    out.p_prime_scaled.push_back({cs * q.x - sn * y + out.denominator * tx, sn * q.x + cs * y + out.denominator * ty});
  }
  out.p = to_embedding(out.p_int);
  const double den = static_cast<double>(out.denominator);
  for (const auto& q : out.p_prime_scaled) out.p_prime.emplace_back(q.x / den, q.y / den);
  return out;
}

CongruentPair sample_congruent_pair(const Graph& g, int orientation, std::uint64_t seed, bool collinear) {
  return sample_congruent_pair(g.n(), orientation, seed, collinear);
}

IntMatrix pair_system_jacobian_int(const Graph& g, const CongruentPair& pair) {
  IntMatrix jac(g.m(), 4 * g.n());
  jac.leftCols(2 * g.n()) = rigidity_matrix(g, pair.p_int);
  jac.rightCols(2 * g.n()) = -rigidity_matrix(g, pair.p_prime_scaled);
  return jac;
}

}  // namespace rigidlines
