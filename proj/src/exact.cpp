#include "rigidlines/exact.hpp"

#include <stdexcept>
#include <string>

#include "rigidlines/errors.hpp"
#include "rigidlines/random.hpp"

namespace rigidlines {

namespace modp {

std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mul(r, a, p);
    a = mul(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t inv(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw std::domain_error("modular inverse of zero");
  return pow(a, p - 2, p);
}

std::uint64_t reduce(std::int64_t x, std::uint64_t p) {
  const auto sp = static_cast<std::int64_t>(p);
  std::int64_t r = x % sp;
  if (r < 0) r += sp;
  return static_cast<std::uint64_t>(r);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  static constexpr std::uint64_t kBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (auto q : kBases) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (auto a : kBases) {
    std::uint64_t x = pow(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t random_prime(std::uint64_t seed) {
  constexpr std::uint64_t kTop = 1ULL << 61;
  constexpr std::uint64_t kWindow = 1ULL << 40;
  Rng rng(seed);
  for (;;) {
    std::uint64_t c = (kTop - kWindow + (rng() % kWindow)) | 1ULL;
    if (is_prime(c)) return c;
  }
}

Matrix Matrix::from(const IntMatrix& m, std::uint64_t p) {
  Matrix out(static_cast<int>(m.rows()), static_cast<int>(m.cols()), p);
  for (int i = 0; i < out.rows_; ++i)
    for (int j = 0; j < out.cols_; ++j) out(i, j) = reduce(m(i, j), p);
  return out;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_, p_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

std::vector<int> Matrix::rref() {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < cols_ && row < rows_; ++col) {
    int piv = -1;
    for (int i = row; i < rows_; ++i)
      if ((*this)(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != row)
      for (int j = 0; j < cols_; ++j) std::swap((*this)(piv, j), (*this)(row, j));
    const std::uint64_t s = inv((*this)(row, col), p_);
    for (int j = col; j < cols_; ++j) (*this)(row, j) = mul((*this)(row, j), s, p_);
    for (int i = 0; i < rows_; ++i) {
      if (i == row) continue;
      const std::uint64_t f = (*this)(i, col);
      if (f == 0) continue;
      for (int j = col; j < cols_; ++j) {
        std::uint64_t t = mul(f, (*this)(row, j), p_);
        std::uint64_t& x = (*this)(i, j);
        x = x >= t ? x - t : x + p_ - t;
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

int Matrix::rank() const {
  Matrix copy = *this;
  return static_cast<int>(copy.rref().size());
}

std::vector<std::vector<std::uint64_t>> Matrix::null_space() const {
  Matrix r = *this;
  auto pivots = r.rref();
  std::vector<char> is_pivot(cols_, 0);
  for (int c : pivots) is_pivot[c] = 1;
  std::vector<std::vector<std::uint64_t>> basis;
  for (int free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<std::uint64_t> v(cols_, 0);
    v[free] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) {
      std::uint64_t x = r(static_cast<int>(k), free);
      v[pivots[k]] = x == 0 ? 0 : p_ - x;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace modp

namespace {

std::optional<modp::Matrix> reduce_rational(const RationalMatrix& m, std::uint64_t p) {
  modp::Matrix out(m.rows, m.cols, p);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) {
      const Rational& q = m(i, j);
      std::uint64_t den = mpz_fdiv_ui(q.get_den_mpz_t(), p);
      if (den == 0) return std::nullopt;
      std::uint64_t num = mpz_fdiv_ui(q.get_num_mpz_t(), p);
      out(i, j) = modp::mul(num, modp::inv(den, p), p);
    }
  return out;
}

template <class RankAt>
int agreed_rank(std::uint64_t seed, RankAt rank_at) {
  for (std::uint64_t round = 0; round < 8; ++round) {
    std::uint64_t p1 = modp::random_prime(derive_seed(seed, 2 * round));
    std::uint64_t p2 = modp::random_prime(derive_seed(seed, 2 * round + 1));
    if (p1 == p2) continue;
    auto r1 = rank_at(p1);
    auto r2 = rank_at(p2);
    if (r1 && r2 && *r1 == *r2) return *r1;
  }
  throw InvariantViolation("rank_exact: no two primes agreed after 8 rounds");
}

}  // namespace

Eigen::MatrixXd RationalMatrix::to_double() const {
  Eigen::MatrixXd out(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) out(i, j) = (*this)(i, j).get_d();
  return out;
}

int rank_exact(const IntMatrix& m, std::uint64_t seed) {
  if (m.size() == 0) return 0;
  return agreed_rank(seed, [&](std::uint64_t p) -> std::optional<int> { return modp::Matrix::from(m, p).rank(); });
}

int rank_exact(const RationalMatrix& m, std::uint64_t seed) {
  if (m.data.empty()) return 0;
  return agreed_rank(seed, [&](std::uint64_t p) -> std::optional<int> {
    auto r = reduce_rational(m, p);
    if (!r) return std::nullopt;
    return r->rank();
  });
}

Rational exact_meet_residual(const ExactLine& l1, const ExactLine& l2) {
  return (l1.a - l2.a) * (l1.d - l2.d) - (l1.b - l2.b) * (l1.c - l2.c);
}

ExactPoint3 exact_point_at(const ExactLine& l, const Rational& t) {
  return {l.a + t * l.c, l.b + t * l.d, t};
}

std::optional<ExactLine> exact_line_through(const ExactPoint3& p, const ExactPoint3& q) {
  Rational dz = q.z - p.z;
  if (dz == 0) return std::nullopt;
  ExactLine l;
  l.c = (q.x - p.x) / dz;
  l.d = (q.y - p.y) / dz;
  l.a = p.x - l.c * p.z;
  l.b = p.y - l.d * p.z;
  return l;
}

namespace {

struct V3 {
  Rational x, y, z;
};

V3 cross(const V3& u, const V3& v) {
  return {u.y * v.z - u.z * v.y, u.z * v.x - u.x * v.z, u.x * v.y - u.y * v.x};
}

bool is_zero(const V3& v) { return v.x == 0 && v.y == 0 && v.z == 0; }

}  // namespace

std::optional<ExactLine> exact_transversal(const ExactLine& l1, const ExactLine& l2, const ExactLine& l3,
                                           const Rational& s) {
  ExactPoint3 q = exact_point_at(l3, s);
  V3 n1 = cross({l1.a - q.x, l1.b - q.y, -q.z}, {l1.c, l1.d, 1});
  V3 n2 = cross({l2.a - q.x, l2.b - q.y, -q.z}, {l2.c, l2.d, 1});
  if (is_zero(n1) || is_zero(n2)) return std::nullopt;
  V3 dir = cross(n1, n2);
  if (is_zero(dir) || dir.z == 0) return std::nullopt;
  ExactLine l;
  l.c = dir.x / dir.z;
  l.d = dir.y / dir.z;
  l.a = q.x - l.c * q.z;
  l.b = q.y - l.d * q.z;
  return l;
}

RationalMatrix exact_line_system_jacobian(const Graph& g, std::span<const ExactLine> lines) {
  if (static_cast<int>(lines.size()) != g.n()) throw std::invalid_argument("line count does not match graph");
  RationalMatrix jac(g.m(), 4 * g.n());
  for (int k = 0; k < g.m(); ++k) {
    auto [i, j] = g.edges()[k];
    const auto& li = lines[i];
    const auto& lj = lines[j];
    Rational da = li.a - lj.a, db = li.b - lj.b, dc = li.c - lj.c, dd = li.d - lj.d;
    jac(k, 4 * i + 0) = dd;
    jac(k, 4 * i + 1) = -dc;
    jac(k, 4 * i + 2) = -db;
    jac(k, 4 * i + 3) = da;
    jac(k, 4 * j + 0) = -dd;
    jac(k, 4 * j + 1) = dc;
    jac(k, 4 * j + 2) = db;
    jac(k, 4 * j + 3) = -da;
  }
  return jac;
}

}  // namespace rigidlines
