#include "rigidlines/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Geometry>
#include <Eigen/SVD>

namespace rigidlines {

namespace {

double config_scale(std::span<const Line> lines) {
  double s = 0;
  for (const auto& l : lines) s = std::max(s, l.max_abs());
  return 1.0 + s;
}

void require_two(std::span<const Line> lines) {
  if (lines.size() < 2) throw std::domain_error("at least two lines are required");
}

// Smallest singular value and its right singular vector of a matrix whose
// rows have been scaled to unit length.
std::pair<double, Eigen::Vector4d> smallest_singular(Eigen::MatrixXd rows) {
  for (Eigen::Index i = 0; i < rows.rows(); ++i) {
    double nrm = rows.row(i).norm();
    if (nrm > 0) rows.row(i) /= nrm;
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(rows, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  double sigma = sv.size() < 4 ? 0.0 : sv(3);
  return {sigma, svd.matrixV().col(3)};
}

}  // namespace

double Line::max_abs() const { return std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d)}); }

double meet_residual(const Line& l1, const Line& l2) {
  return (l1.a - l2.a) * (l1.d - l2.d) - (l1.b - l2.b) * (l1.c - l2.c);
}

double pair_scale(const Line& l1, const Line& l2) { return 1.0 + std::max(l1.max_abs(), l2.max_abs()); }

bool lines_meet(const Line& l1, const Line& l2, double tol) {
  return std::abs(meet_residual(l1, l2)) <= tol * pair_scale(l1, l2);
}

bool lines_coincide(const Line& l1, const Line& l2, double tol) {
  double lim = tol * pair_scale(l1, l2);
  return std::abs(l1.a - l2.a) <= lim && std::abs(l1.b - l2.b) <= lim && std::abs(l1.c - l2.c) <= lim &&
         std::abs(l1.d - l2.d) <= lim;
}

Graph intersection_graph(std::span<const Line> lines, double tol) {
  if (!(tol > 0)) throw std::domain_error("tolerance must be positive");
  std::vector<Edge> edges;
  const int n = static_cast<int>(lines.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (lines_meet(lines[i], lines[j], tol)) edges.emplace_back(i, j);
  return Graph(n, std::move(edges));
}

PointFit common_point(std::span<const Line> lines, double tol) {
  require_two(lines);
  PointFit fit;
  const double scale = config_scale(lines);
  double spread = 0;
  for (const auto& l : lines)
    spread = std::max({spread, std::abs(l.c - lines[0].c), std::abs(l.d - lines[0].d)});
  if (spread <= tol * scale) {
    fit.status = PointFit::Status::parallel_family;
    fit.residual = spread / scale;
    return fit;
  }
  // Homogeneous point (x, y, z, w): a w = x - c z, b w = y - d z.
  const auto n = static_cast<Eigen::Index>(lines.size());
  Eigen::MatrixXd rows(2 * n, 4);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& l = lines[i];
    rows.row(2 * i) << 1.0, 0.0, -l.c, -l.a;
    rows.row(2 * i + 1) << 0.0, 1.0, -l.d, -l.b;
  }
  auto [sigma, x] = smallest_singular(rows);
  fit.residual = sigma;
  if (sigma > tol || std::abs(x(3)) < 1e-14) return fit;
  fit.status = PointFit::Status::point;
  fit.point = x.head<3>() / x(3);
  return fit;
}

bool Plane::is_vertical(double tol) const { return std::abs(normal.z()) <= tol; }

std::optional<Point3> Plane::slope_form(double tol) const {
  if (is_vertical(tol)) return std::nullopt;
  const double g = normal.z();
  return Point3{-normal.x() / g, -normal.y() / g, offset / g};
}

Plane Plane::from_slope(double lambda, double mu, double nu) {
  Point3 nrm{lambda, mu, -1.0};
  double len = nrm.norm();
  return Plane{nrm / len, -nu / len};
}

bool Plane::contains(const Line& l, double tol) const {
  double lim = tol * (1.0 + std::max(l.max_abs(), std::abs(offset)));
  return std::abs(normal.x() * l.a + normal.y() * l.b - offset) <= lim &&
         std::abs(normal.x() * l.c + normal.y() * l.d + normal.z()) <= lim;
}

PlaneFit common_plane(std::span<const Line> lines, double tol) {
  require_two(lines);
  const auto n = static_cast<Eigen::Index>(lines.size());
  Eigen::MatrixXd rows(2 * n, 4);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& l = lines[i];
    rows.row(2 * i) << l.a, l.b, 0.0, -1.0;
    rows.row(2 * i + 1) << l.c, l.d, 1.0, 0.0;
  }
  auto [sigma, x] = smallest_singular(rows);
  PlaneFit fit;
  fit.residual = sigma;
  double len = x.head<3>().norm();
  if (sigma > tol || len < 1e-14) return fit;
  fit.plane = Plane{x.head<3>() / len, x(3) / len};
  return fit;
}

std::string triple_kind_name(TripleKind kind) {
  switch (kind) {
    case TripleKind::concurrent_and_coplanar: return "concurrent_and_coplanar";
    case TripleKind::concurrent_only: return "concurrent_only";
    case TripleKind::coplanar_only: return "coplanar_only";
    case TripleKind::two_concurrent_mixed: return "two_concurrent_mixed";
    case TripleKind::pairwise_skew: return "pairwise_skew";
  }
  return "?";
}

TripleClass classify_triple(const Line& l1, const Line& l2, const Line& l3, double tol) {
  if (lines_coincide(l1, l2, tol) || lines_coincide(l1, l3, tol) || lines_coincide(l2, l3, tol))
    throw std::domain_error("classify_triple: input lines must be pairwise distinct");
  const Line triple[3] = {l1, l2, l3};
  auto pt = common_point(triple, tol);
  auto pl = common_plane(triple, tol);
  TripleClass out;
  const bool concurrent = pt.found();
  const bool coplanar = pl.found();
  if (pt.status == PointFit::Status::point) out.point = pt.point;
  out.parallel = pt.status == PointFit::Status::parallel_family;
  out.plane = pl.plane;
  if (concurrent && coplanar)
    out.kind = TripleKind::concurrent_and_coplanar;
  else if (concurrent)
    out.kind = TripleKind::concurrent_only;
  else if (coplanar)
    out.kind = TripleKind::coplanar_only;
  else if (lines_meet(l1, l2, tol) || lines_meet(l1, l3, tol) || lines_meet(l2, l3, tol))
    out.kind = TripleKind::two_concurrent_mixed;
  else
    out.kind = TripleKind::pairwise_skew;
  out.family_dim = (concurrent || coplanar) ? 2 : 1;
  return out;
}

std::string transversal_failure_name(TransversalFailure f) {
  switch (f) {
    case TransversalFailure::none: return "none";
    case TransversalFailure::point_on_first: return "point_on_first";
    case TransversalFailure::point_on_second: return "point_on_second";
    case TransversalFailure::planes_coincide: return "planes_coincide";
    case TransversalFailure::horizontal: return "horizontal";
    case TransversalFailure::residual: return "residual";
  }
  return "?";
}

TransversalResult transversal(const Line& l1, const Line& l2, const Line& l3, double s, double tol) {
  TransversalResult out;
  const Point3 q = l3.point_at(s);
  const double scale = 1.0 + std::max({l1.max_abs(), l2.max_abs(), q.cwiseAbs().maxCoeff()});
  const Point3 n1 = (l1.base() - q).cross(l1.direction());
  const Point3 n2 = (l2.base() - q).cross(l2.direction());
  const double lim1 = tol * scale * l1.direction().norm();
  const double lim2 = tol * scale * l2.direction().norm();
  if (n1.norm() <= lim1) {
    out.reason = TransversalFailure::point_on_first;
    return out;
  }
  if (n2.norm() <= lim2) {
    out.reason = TransversalFailure::point_on_second;
    return out;
  }
  const Point3 dir = n1.cross(n2);
  if (dir.norm() <= tol * n1.norm() * n2.norm()) {
    out.reason = TransversalFailure::planes_coincide;
    return out;
  }
  if (std::abs(dir.z()) <= tol * dir.norm()) {
    out.reason = TransversalFailure::horizontal;
    return out;
  }
  Line l;
  l.c = dir.x() / dir.z();
  l.d = dir.y() / dir.z();
  l.a = q.x() - l.c * q.z();
  l.b = q.y() - l.d * q.z();
  if (!lines_meet(l, l1, tol) || !lines_meet(l, l2, tol) || !lines_meet(l, l3, tol)) {
    out.reason = TransversalFailure::residual;
    return out;
  }
  out.line = l;
  return out;
}

std::optional<Line> line_through(const Point3& p, const Point3& q) {
  if (p == q) throw std::domain_error("line_through: points coincide");
  const double dz = q.z() - p.z();
  const double scale = 1.0 + std::max(p.cwiseAbs().maxCoeff(), q.cwiseAbs().maxCoeff());
  if (std::abs(dz) <= 1e-14 * scale) return std::nullopt;
  Line l;
  l.c = (q.x() - p.x()) / dz;
  l.d = (q.y() - p.y()) / dz;
  l.a = p.x() - l.c * p.z();
  l.b = p.y() - l.d * p.z();
  return l;
}

}  // namespace rigidlines
