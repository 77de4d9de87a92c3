#include <doctest.h>

#include "rigidlines/exact.hpp"
#include "rigidlines/random.hpp"

using namespace rigidlines;

namespace {

// Plain Gaussian elimination over Q.
int rational_rank(RationalMatrix m) {
  int rank = 0;
  for (int c = 0; c < m.cols && rank < m.rows; ++c) {
    int piv = -1;
    for (int r = rank; r < m.rows; ++r)
      if (m(r, c) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    for (int j = 0; j < m.cols; ++j) std::swap(m(piv, j), m(rank, j));
    for (int r = rank + 1; r < m.rows; ++r) {
      if (m(r, c) == 0) continue;
      Rational f = m(r, c) / m(rank, c);
      for (int j = c; j < m.cols; ++j) m(r, j) -= f * m(rank, j);
    }
    ++rank;
  }
  return rank;
}

RationalMatrix to_rational(const IntMatrix& m) {
  RationalMatrix r(static_cast<int>(m.rows()), static_cast<int>(m.cols()));
  for (int i = 0; i < r.rows; ++i)
    for (int j = 0; j < r.cols; ++j) r(i, j) = Rational(static_cast<long>(m(i, j)));
  return r;
}

}  // namespace

TEST_CASE("rank_exact examples") {
  CHECK(rank_exact(IntMatrix::Identity(5, 5)) == 5);
  CHECK(rank_exact(IntMatrix::Zero(4, 6)) == 0);
  Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1> u(4), v(3);
  u << 1, -2, 3, 7;
  v << 5, 0, -4;
  IntMatrix outer = u * v.transpose();
  CHECK(rank_exact(outer) == 1);
  CHECK(rank_exact(IntMatrix(0, 3)) == 0);
}

TEST_CASE("rank_exact matches rational elimination") {
  auto rng = make_rng(9);
  for (int t = 0; t < 200; ++t) {
    int r = static_cast<int>(uniform_int(rng, 1, 8)), c = static_cast<int>(uniform_int(rng, 1, 8));
    int k = static_cast<int>(uniform_int(rng, 0, std::min(r, c)));
    IntMatrix a(r, k), b(k, c);
    for (int i = 0; i < a.size(); ++i) a.data()[i] = uniform_int(rng, -5, 5);
    for (int i = 0; i < b.size(); ++i) b.data()[i] = uniform_int(rng, -5, 5);
    IntMatrix m = k ? IntMatrix(a * b) : IntMatrix::Zero(r, c);
    CHECK(rank_exact(m, static_cast<std::uint64_t>(t)) == rational_rank(to_rational(m)));
  }
}

TEST_CASE("rank_exact on huge entries") {
  // Rows differ by a multiple that overflows naive int64 products.
  const std::int64_t big = (std::int64_t{1} << 62) - 57;
  IntMatrix m(2, 2);
  m << big, big - 1, big - 1, big - 2;
  CHECK(rank_exact(m) == 2);
  IntMatrix s(2, 2);
  s << big, big, big, big;
  CHECK(rank_exact(s) == 1);
}

TEST_CASE("rank_exact on rationals") {
  RationalMatrix m(2, 3);
  m(0, 0) = Rational(1, 3);
  m(0, 1) = Rational(2, 7);
  m(0, 2) = 1;
  m(1, 0) = Rational(2, 3);
  m(1, 1) = Rational(4, 7);
  m(1, 2) = 2;
  CHECK(rank_exact(m) == 1);
  m(1, 2) = Rational(5, 2);
  CHECK(rank_exact(m) == 2);
}

TEST_CASE("modular helpers") {
  std::uint64_t p = modp::random_prime(1);
  CHECK(modp::is_prime(p));
  CHECK(p >= (std::uint64_t{1} << 61) - (std::uint64_t{1} << 40));
  CHECK(p < (std::uint64_t{1} << 61));
  CHECK(modp::mul(modp::inv(12345, p), 12345, p) == 1);
  CHECK(modp::pow(3, p - 1, p) == 1);
  CHECK(modp::reduce(-1, p) == p - 1);
  CHECK_FALSE(modp::is_prime(561));
  CHECK(modp::is_prime(2));

  modp::Matrix m(2, 3, p);
  m(0, 0) = 1;
  m(0, 1) = 2;
  m(0, 2) = 3;
  m(1, 0) = 2;
  m(1, 1) = 4;
  m(1, 2) = 6;
  CHECK(m.rank() == 1);
  auto ns = m.null_space();
  CHECK(ns.size() == 2);
  for (const auto& x : ns) {
    std::uint64_t dot = (modp::mul(1, x[0], p) + modp::mul(2, x[1], p)) % p;
    dot = (dot + modp::mul(3, x[2], p)) % p;
    CHECK(dot == 0);
  }
}
