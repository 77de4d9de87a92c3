#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "rigidlines/geometry.hpp"

namespace rigidlines {

/// Planar embedding of a graph's vertices.
using Embedding = std::vector<Point2>;

/// Ordered pair of planar points (a, b); the line it maps to is the locus of
/// rotations taking a to b.
struct PointPair {
  Point2 a = Point2::Zero();
  Point2 b = Point2::Zero();
};

/// Counterclockwise rotation about `center` by theta, stored as
/// cot_half = cot(theta / 2); theta lies in (0, 2 pi).
struct Rotation {
  Point2 center = Point2::Zero();
  double cot_half = 0;

  double angle() const;
  Point2 apply(const Point2& p) const;
};

/// Orthogonal map plus translation; orientation is det(linear) = +1 or -1.
struct PlanarMotion {
  Eigen::Matrix2d linear = Eigen::Matrix2d::Identity();
  Point2 translation = Point2::Zero();
  int orientation = 1;
  double residual = 0;  // max |linear a_i + translation - b_i|

  Point2 apply(const Point2& p) const { return linear * p + translation; }
};

/// Thrown by recover_motion when two pairwise distances disagree.
class NonCongruentError : public std::invalid_argument {
 public:
  NonCongruentError(std::size_t i, std::size_t j, double gap)
      : std::invalid_argument("point sets are not congruent: distance " + std::to_string(i) + "-" + std::to_string(j) +
                              " differs by " + std::to_string(gap)),
        i_(i),
        j_(j) {}
  std::size_t i() const { return i_; }
  std::size_t j() const { return j_; }

 private:
  std::size_t i_, j_;
};

/// u = (a + b) / 2, v = rot90ccw(b - a) / 2; the line is {(u + t v, t)}.
Line to_line(const PointPair& p);
Line to_line(const Point2& a, const Point2& b);

/// Inverse of to_line: a = u - rot90cw(v), b = u + rot90cw(v).
PointPair from_line(const Line& l);

/// Rotation represented by the point (cx, cy, cot(theta/2)).
Rotation rotation_at(const Point3& point);

/// Componentwise to_line over two embeddings of equal size.
LineConfig phi(const Embedding& p, const Embedding& p_prime);

/// Least-squares rigid motion of the requested orientation taking A to B
/// (Procrustes with a determinant constraint). Throws NonCongruentError when
/// some pairwise distance differs by more than tol * scale.
PlanarMotion recover_motion(std::span<const Point2> a, std::span<const Point2> b, int orientation,
                            double tol = kDefaultTol);

/// Largest distance from a point to the best-fit line, relative to the
/// point set's extent.
double collinearity_residual(std::span<const Point2> pts);

/// Integer-coordinate form used for exact checks.
struct IntPoint2 {
  std::int64_t x = 0, y = 0;
};

/// Doubled chart coordinates (2u, 2v) of to_line(a, b); integral for
/// integral inputs.
struct DoubledLine {
  std::int64_t a2, b2, c2, d2;
};

DoubledLine to_doubled_line(const IntPoint2& a, const IntPoint2& b);

/// meet_residual of the undoubled lines times 4, computed exactly.
std::int64_t exact_meet_residual_x4(const DoubledLine& l1, const DoubledLine& l2);

}  // namespace rigidlines
