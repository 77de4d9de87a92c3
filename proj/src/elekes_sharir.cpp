#include "rigidlines/elekes_sharir.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/LU>
#include <Eigen/SVD>

namespace rigidlines {

namespace {

Point2 rot90ccw(const Point2& p) { return {-p.y(), p.x()}; }
Point2 rot90cw(const Point2& p) { return {p.y(), -p.x()}; }

}  // namespace

double Rotation::angle() const { return 2.0 * std::atan2(1.0, cot_half); }

Point2 Rotation::apply(const Point2& p) const {
  // With t = cot(theta/2): cos theta = (t^2 - 1)/(t^2 + 1), sin theta = 2t/(t^2 + 1).
  const double t = cot_half;
  const double den = t * t + 1.0;
  const double cs = (t * t - 1.0) / den;
  const double sn = 2.0 * t / den;
  const Point2 r = p - center;
  return center + Point2{cs * r.x() - sn * r.y(), sn * r.x() + cs * r.y()};
}

Line to_line(const Point2& a, const Point2& b) {
  const Point2 u = 0.5 * (a + b);
  const Point2 v = 0.5 * rot90ccw(b - a);
  return {u.x(), u.y(), v.x(), v.y()};
}

Line to_line(const PointPair& p) { return to_line(p.a, p.b); }

PointPair from_line(const Line& l) {
  const Point2 u{l.a, l.b};
  const Point2 half = rot90cw(Point2{l.c, l.d});
  return {u - half, u + half};
}

Rotation rotation_at(const Point3& point) { return {Point2{point.x(), point.y()}, point.z()}; }

LineConfig phi(const Embedding& p, const Embedding& p_prime) {
  if (p.size() != p_prime.size()) throw std::domain_error("phi: embeddings differ in size");
  LineConfig out;
  out.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out.push_back(to_line(p[i], p_prime[i]));
  return out;
}

PlanarMotion recover_motion(std::span<const Point2> a, std::span<const Point2> b, int orientation, double tol) {
  if (a.size() != b.size() || a.size() < 2) throw std::domain_error("recover_motion: need two equal lists of >= 2 points");
  if (orientation != 1 && orientation != -1) throw std::domain_error("recover_motion: orientation must be +1 or -1");
  double scale = 1.0;
  for (std::size_t i = 0; i < a.size(); ++i) scale = std::max({scale, a[i].cwiseAbs().maxCoeff(), b[i].cwiseAbs().maxCoeff()});
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      double gap = std::abs((a[i] - a[j]).norm() - (b[i] - b[j]).norm());
      if (gap > tol * scale) throw NonCongruentError(i, j, gap);
    }

  Point2 ca = Point2::Zero(), cb = Point2::Zero();
  for (std::size_t i = 0; i < a.size(); ++i) {
    ca += a[i];
    cb += b[i];
  }
  ca /= static_cast<double>(a.size());
  cb /= static_cast<double>(b.size());
  Eigen::Matrix2d h = Eigen::Matrix2d::Zero();
  for (std::size_t i = 0; i < a.size(); ++i) h += (a[i] - ca) * (b[i] - cb).transpose();
  Eigen::JacobiSVD<Eigen::Matrix2d> svd(h, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Eigen::Matrix2d u = svd.matrixU();
  const Eigen::Matrix2d v = svd.matrixV();
  Eigen::Matrix2d fix = Eigen::Matrix2d::Identity();
  fix(1, 1) = orientation * (v.determinant() * u.determinant() < 0 ? -1.0 : 1.0);

  PlanarMotion m;
  m.linear = v * fix * u.transpose();
  m.translation = cb - m.linear * ca;
  m.orientation = orientation;
  for (std::size_t i = 0; i < a.size(); ++i) m.residual = std::max(m.residual, (m.apply(a[i]) - b[i]).norm());
  return m;
}

double collinearity_residual(std::span<const Point2> pts) {
  if (pts.size() < 3) return 0.0;
  Point2 c = Point2::Zero();
  for (const auto& p : pts) c += p;
  c /= static_cast<double>(pts.size());
  Eigen::Matrix2d cov = Eigen::Matrix2d::Zero();
  double extent = 0;
  for (const auto& p : pts) {
    cov += (p - c) * (p - c).transpose();
    extent = std::max(extent, (p - c).norm());
  }
  Eigen::JacobiSVD<Eigen::Matrix2d> svd(cov, Eigen::ComputeFullU);
  const Point2 normal = svd.matrixU().col(1);
  double worst = 0;
  for (const auto& p : pts) worst = std::max(worst, std::abs(normal.dot(p - c)));
  return worst / (1.0 + extent);
}

DoubledLine to_doubled_line(const IntPoint2& a, const IntPoint2& b) {
  // 2u = a + b, 2v = rot90ccw(b - a).
  return {a.x + b.x, a.y + b.y, -(b.y - a.y), b.x - a.x};
}

std::int64_t exact_meet_residual_x4(const DoubledLine& l1, const DoubledLine& l2) {
  // Doubling every coordinate scales the quadratic form by 4.
  return (l1.a2 - l2.a2) * (l1.d2 - l2.d2) - (l1.b2 - l2.b2) * (l1.c2 - l2.c2);
}

}  // namespace rigidlines
