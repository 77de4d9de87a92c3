#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "rigidlines/graph.hpp"

namespace rigidlines {

using Point2 = Eigen::Vector2d;
using Point3 = Eigen::Vector3d;

inline constexpr double kDefaultTol = 1e-8;

/// Non-horizontal line l(t) = (a, b, 0) + t (c, d, 1).
struct Line {
  double a = 0, b = 0, c = 0, d = 0;

  Point3 point_at(double t) const { return {a + t * c, b + t * d, t}; }
  Point3 base() const { return {a, b, 0.0}; }
  Point3 direction() const { return {c, d, 1.0}; }
  double max_abs() const;

  friend bool operator==(const Line&, const Line&) = default;
};

using LineConfig = std::vector<Line>;

/// g(l1, l2) = (a1-a2)(d1-d2) - (b1-b2)(c1-c2). Vanishes iff the lines meet,
/// are parallel or coincide.
double meet_residual(const Line& l1, const Line& l2);

/// 1 + largest coordinate magnitude of the two lines.
double pair_scale(const Line& l1, const Line& l2);

/// |g| <= tol * pair_scale.
bool lines_meet(const Line& l1, const Line& l2, double tol = kDefaultTol);

/// All four chart coordinates agree within tol * pair_scale.
bool lines_coincide(const Line& l1, const Line& l2, double tol = kDefaultTol);

Graph intersection_graph(std::span<const Line> lines, double tol = kDefaultTol);

struct PointFit {
  enum class Status { point, parallel_family, none };
  Status status = Status::none;
  Point3 point = Point3::Zero();  // valid when status == point
  double residual = 0;            // smallest singular value of the normalized incidence system
  bool found() const { return status != Status::none; }
};

/// Common point of all lines, by least squares on a = x - c z, b = y - d z.
/// A family of translates of one direction is reported as parallel_family.
PointFit common_point(std::span<const Line> lines, double tol = kDefaultTol);

/// Plane alpha x + beta y + gamma z = delta with unit normal.
///
/// General form so that vertical planes (which contain the images of pure
/// reflections) are representable; slope_form() gives z = lambda x + mu y + nu
/// when the plane is not vertical.
struct Plane {
  Point3 normal = Point3::UnitZ();
  double offset = 0;

  bool is_vertical(double tol = kDefaultTol) const;
  std::optional<Point3> slope_form(double tol = kDefaultTol) const;
  static Plane from_slope(double lambda, double mu, double nu);
  bool contains(const Line& l, double tol = kDefaultTol) const;
};

struct PlaneFit {
  std::optional<Plane> plane;
  double residual = 0;
  bool found() const { return plane.has_value(); }
};

/// Common plane of all lines, by least squares on the homogeneous system
/// alpha a + beta b = delta, alpha c + beta d + gamma = 0.
PlaneFit common_plane(std::span<const Line> lines, double tol = kDefaultTol);

enum class TripleKind { concurrent_and_coplanar, concurrent_only, coplanar_only, two_concurrent_mixed, pairwise_skew };

std::string triple_kind_name(TripleKind kind);

struct TripleClass {
  TripleKind kind = TripleKind::pairwise_skew;
  std::optional<Point3> point;  // common point, when finite
  bool parallel = false;        // concurrent at infinity
  std::optional<Plane> plane;
  int family_dim = 1;  // dimension of the lines meeting all three
};

/// Throws std::domain_error when two of the lines coincide.
TripleClass classify_triple(const Line& l1, const Line& l2, const Line& l3, double tol = kDefaultTol);

enum class TransversalFailure { none, point_on_first, point_on_second, planes_coincide, horizontal, residual };

std::string transversal_failure_name(TransversalFailure f);

struct TransversalResult {
  std::optional<Line> line;
  TransversalFailure reason = TransversalFailure::none;
};

/// The line through q = l3(s) meeting l1 and l2, taken as the intersection
/// of the planes spanned by q with l1 and with l2.
TransversalResult transversal(const Line& l1, const Line& l2, const Line& l3, double s, double tol = kDefaultTol);

/// Join of two points; empty when the join is horizontal. Throws
/// std::domain_error when p == q.
std::optional<Line> line_through(const Point3& p, const Point3& q);

}  // namespace rigidlines
