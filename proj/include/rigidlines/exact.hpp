#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Core>
#include <gmpxx.h>

#include "rigidlines/geometry.hpp"
#include "rigidlines/graph.hpp"

namespace rigidlines {

using Rational = mpq_class;
using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

/// Row-major dense matrix of rationals, used where entries outgrow int64.
struct RationalMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Rational> data;

  RationalMatrix() = default;
  RationalMatrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c) {}
  Rational& operator()(int i, int j) { return data[static_cast<std::size_t>(i) * cols + j]; }
  const Rational& operator()(int i, int j) const { return data[static_cast<std::size_t>(i) * cols + j]; }
  Eigen::MatrixXd to_double() const;
};

/// Exact rank over Q.
///
/// The matrix is reduced modulo two random primes in [2^61 - 2^40, 2^61) and
/// eliminated over each field; the rank is accepted once two primes agree
/// (up to 8 rounds, then InvariantViolation). A prime can only under-report
/// the rank, and only when it divides every maximal nonvanishing minor. With
/// Hadamard bound H on those minors, at most log2(H)/60 primes in the window
/// are bad out of roughly 2.5e10, so a single draw errs with probability
/// below log2(H) * 1e-12. Entries are reduced exactly (int64 or GMP), so no
/// overflow can occur.
int rank_exact(const IntMatrix& m, std::uint64_t seed = 0x5eedULL);
int rank_exact(const RationalMatrix& m, std::uint64_t seed = 0x5eedULL);

/// Line with rational chart coordinates.
struct ExactLine {
  Rational a, b, c, d;

  Line to_double() const { return {a.get_d(), b.get_d(), c.get_d(), d.get_d()}; }
  friend bool operator==(const ExactLine&, const ExactLine&) = default;
};

using ExactLineConfig = std::vector<ExactLine>;

struct ExactPoint3 {
  Rational x, y, z;
  friend bool operator==(const ExactPoint3&, const ExactPoint3&) = default;
};

Rational exact_meet_residual(const ExactLine& l1, const ExactLine& l2);
ExactPoint3 exact_point_at(const ExactLine& l, const Rational& t);
std::optional<ExactLine> exact_line_through(const ExactPoint3& p, const ExactPoint3& q);
/// Same construction as transversal(); empty at any degeneracy.
std::optional<ExactLine> exact_transversal(const ExactLine& l1, const ExactLine& l2, const ExactLine& l3,
                                           const Rational& s);

/// Jacobian of the incidence system over the edges of g (m x 4n).
RationalMatrix exact_line_system_jacobian(const Graph& g, std::span<const ExactLine> lines);

namespace modp {

std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t inv(std::uint64_t a, std::uint64_t p);
std::uint64_t reduce(std::int64_t x, std::uint64_t p);
bool is_prime(std::uint64_t n);
/// Random prime in [2^61 - 2^40, 2^61).
std::uint64_t random_prime(std::uint64_t seed);

/// Dense matrix over F_p.
class Matrix {
 public:
  Matrix(int rows, int cols, std::uint64_t p) : rows_(rows), cols_(cols), p_(p), data_(std::size_t(rows) * cols, 0) {}
  static Matrix from(const IntMatrix& m, std::uint64_t p);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::uint64_t prime() const { return p_; }
  std::uint64_t& operator()(int i, int j) { return data_[std::size_t(i) * cols_ + j]; }
  std::uint64_t operator()(int i, int j) const { return data_[std::size_t(i) * cols_ + j]; }

  Matrix transposed() const;
  int rank() const;
  /// Basis of {x : M x = 0}.
  std::vector<std::vector<std::uint64_t>> null_space() const;

 private:
  // In-place reduced row echelon form; returns pivot columns.
  std::vector<int> rref();

  int rows_, cols_;
  std::uint64_t p_;
  std::vector<std::uint64_t> data_;
};

}  // namespace modp

}  // namespace rigidlines
