#include "rigidlines/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include <Eigen/SVD>

#include "rigidlines/errors.hpp"

namespace rigidlines {

namespace {

void require_size(const Graph& g, std::size_t size, const char* what) {
  if (static_cast<int>(size) != g.n())
    throw std::invalid_argument(std::string(what) + " has " + std::to_string(size) + " entries, graph has n=" +
                                std::to_string(g.n()));
}

}  // namespace

int numeric_rank(const Eigen::MatrixXd& m, double tol) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0.0) return 0;
  const double cut = tol * s(0) * static_cast<double>(std::max(m.rows(), m.cols()));
  return static_cast<int>((s.array() > cut).count());
}

Eigen::VectorXd edge_function(const Graph& g, const Embedding& p) {
  require_size(g, p.size(), "embedding");
  Eigen::VectorXd f(g.m());
  for (int k = 0; k < g.m(); ++k) {
    auto [i, j] = g.edges()[k];
    f(k) = (p[i] - p[j]).squaredNorm();
  }
  return f;
}

Eigen::MatrixXd rigidity_matrix(const Graph& g, const Embedding& p) {
  require_size(g, p.size(), "embedding");
  Eigen::MatrixXd r = Eigen::MatrixXd::Zero(g.m(), 2 * g.n());
  for (int k = 0; k < g.m(); ++k) {
    auto [i, j] = g.edges()[k];
    const Point2 d = 2.0 * (p[i] - p[j]);
    r.block<1, 2>(k, 2 * i) = d.transpose();
    r.block<1, 2>(k, 2 * j) = -d.transpose();
  }
  return r;
}

IntMatrix rigidity_matrix(const Graph& g, const IntEmbedding& p) {
  require_size(g, p.size(), "embedding");
  IntMatrix r = IntMatrix::Zero(g.m(), 2 * g.n());
  for (int k = 0; k < g.m(); ++k) {
    auto [i, j] = g.edges()[k];
    const std::int64_t dx = 2 * (p[i].x - p[j].x), dy = 2 * (p[i].y - p[j].y);
    r(k, 2 * i) = dx;
    r(k, 2 * i + 1) = dy;
    r(k, 2 * j) = -dx;
    r(k, 2 * j + 1) = -dy;
  }
  return r;
}

IntEmbedding random_int_embedding(int n, Rng& rng, std::int64_t box) {
  IntEmbedding p(n);
  for (auto& q : p) {
    q.x = uniform_int(rng, -box, box);
    q.y = uniform_int(rng, -box, box);
  }
  return p;
}

Embedding to_embedding(const IntEmbedding& p) {
  Embedding out;
  out.reserve(p.size());
  for (const auto& q : p) out.emplace_back(static_cast<double>(q.x), static_cast<double>(q.y));
  return out;
}

int rigidity_rank(const Graph& g, int trials, std::uint64_t seed, bool exact) {
  if (g.n() < 2) throw std::domain_error("rigidity_rank needs n >= 2");
  if (trials < 1) throw std::domain_error("rigidity_rank needs at least one trial");
  int best = 0;
  for (int t = 0; t < trials; ++t) {
    Rng rng = make_rng(seed, static_cast<std::uint64_t>(t));
    IntEmbedding p = random_int_embedding(g.n(), rng);
    int r = exact ? rank_exact(rigidity_matrix(g, p), derive_seed(seed, 1000 + t))
                  : numeric_rank(rigidity_matrix(g, to_embedding(p)));
    best = std::max(best, r);
  }
  return best;
}

bool is_rigid_numeric(const Graph& g, int trials, std::uint64_t seed, bool exact) {
  return rigidity_rank(g, trials, seed, exact) == 2 * g.n() - 3;
}

Eigen::VectorXd line_system_residuals(const Graph& g, std::span<const Line> lines) {
  require_size(g, lines.size(), "line configuration");
  Eigen::VectorXd r(g.m());
  for (int k = 0; k < g.m(); ++k) {
    auto [i, j] = g.edges()[k];
    r(k) = meet_residual(lines[i], lines[j]);
  }
  return r;
}

Eigen::VectorXd line_system_relative_residuals(const Graph& g, std::span<const Line> lines) {
  Eigen::VectorXd r = line_system_residuals(g, lines);
  for (int k = 0; k < g.m(); ++k) {
    auto [i, j] = g.edges()[k];
    r(k) /= pair_scale(lines[i], lines[j]);
  }
  return r;
}

Eigen::MatrixXd line_system_jacobian(const Graph& g, std::span<const Line> lines) {
  require_size(g, lines.size(), "line configuration");
  Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(g.m(), 4 * g.n());
  for (int k = 0; k < g.m(); ++k) {
    auto [i, j] = g.edges()[k];
    const Line& li = lines[i];
    const Line& lj = lines[j];
    const Eigen::Vector4d grad{li.d - lj.d, -(li.c - lj.c), -(li.b - lj.b), li.a - lj.a};
    jac.block<1, 4>(k, 4 * i) = grad.transpose();
    jac.block<1, 4>(k, 4 * j) = -grad.transpose();
  }
  return jac;
}

DimensionReport line_system_dimension(const Graph& g, std::span<const Line> lines, double tol) {
  Eigen::VectorXd rel = line_system_relative_residuals(g, lines);
  if (g.m() > 0) {
    Eigen::Index worst;
    double w = rel.cwiseAbs().maxCoeff(&worst);
    if (w > tol) {
      auto [i, j] = g.edges()[worst];
      std::ostringstream msg;
      msg << "configuration violates edge {" << i << "," << j << "}: relative residual " << w << " > " << tol;
      throw PreconditionError(msg.str());
    }
  }
  DimensionReport rep;
  rep.ambient_dim = 4 * g.n();
  rep.constraint_count = g.m();
  rep.jacobian_rank = numeric_rank(line_system_jacobian(g, lines), tol);
  rep.local_dim = rep.ambient_dim - rep.jacobian_rank;
  rep.tol = tol;
  rep.certified = rep.jacobian_rank == rep.constraint_count;
  return rep;
}

DimensionReport line_system_dimension_exact(const Graph& g, std::span<const ExactLine> lines) {
  require_size(g, lines.size(), "line configuration");
  for (auto [i, j] : g.edges())
    if (exact_meet_residual(lines[i], lines[j]) != 0)
      throw PreconditionError("configuration violates edge {" + std::to_string(i) + "," + std::to_string(j) + "}");
  DimensionReport rep;
  rep.ambient_dim = 4 * g.n();
  rep.constraint_count = g.m();
  rep.jacobian_rank = rank_exact(exact_line_system_jacobian(g, lines));
  rep.local_dim = rep.ambient_dim - rep.jacobian_rank;
  rep.certified = rep.jacobian_rank == rep.constraint_count;
  rep.exact = true;
  return rep;
}

Eigen::MatrixXd pair_system_jacobian(const Graph& g, const Embedding& p, const Embedding& p_prime) {
  require_size(g, p.size(), "embedding");
  require_size(g, p_prime.size(), "embedding");
  Eigen::MatrixXd jac(g.m(), 4 * g.n());
  jac.leftCols(2 * g.n()) = rigidity_matrix(g, p);
  jac.rightCols(2 * g.n()) = -rigidity_matrix(g, p_prime);
  return jac;
}

DimensionReport pair_system_dimension(const Graph& g, const Embedding& p, const Embedding& p_prime, double tol) {
  const Eigen::VectorXd f = edge_function(g, p);
  const Eigen::VectorXd f2 = edge_function(g, p_prime);
  for (int k = 0; k < g.m(); ++k) {
    double gap = std::abs(f(k) - f2(k)) / (1.0 + std::max(f(k), f2(k)));
    if (gap > tol) {
      auto [i, j] = g.edges()[k];
      std::ostringstream msg;
      msg << "edge {" << i << "," << j << "} has different lengths: relative gap " << gap << " > " << tol;
      throw PreconditionError(msg.str());
    }
  }
  DimensionReport rep;
  rep.ambient_dim = 4 * g.n();
  rep.constraint_count = g.m();
  rep.jacobian_rank = numeric_rank(pair_system_jacobian(g, p, p_prime), tol);
  rep.local_dim = rep.ambient_dim - rep.jacobian_rank;
  rep.tol = tol;
  rep.certified = rep.jacobian_rank == rep.constraint_count;
  return rep;
}

std::vector<bool> global_rigidity_trials(const Graph& g, int trials, std::uint64_t seed) {
  const int n = g.n();
  std::vector<bool> verdicts;
  for (int t = 0; t < trials; ++t) {
    Rng rng = make_rng(seed, static_cast<std::uint64_t>(t));
    const std::uint64_t p = modp::random_prime(rng());
    IntEmbedding emb = random_int_embedding(n, rng);
    // Equilibrium stresses are the left kernel of the rigidity matrix.
    auto stresses = modp::Matrix::from(rigidity_matrix(g, emb), p).transposed().null_space();
    std::vector<std::uint64_t> omega(g.m(), 0);
    for (const auto& basis : stresses) {
      std::uint64_t coef = rng() % p;
      for (int k = 0; k < g.m(); ++k) omega[k] = (omega[k] + modp::mul(coef, basis[k], p)) % p;
    }
    modp::Matrix stress(n, n, p);
    for (int k = 0; k < g.m(); ++k) {
      auto [i, j] = g.edges()[k];
      const std::uint64_t w = omega[k];
      const std::uint64_t neg = w == 0 ? 0 : p - w;
      stress(i, j) = neg;
      stress(j, i) = neg;
      stress(i, i) = (stress(i, i) + w) % p;
      stress(j, j) = (stress(j, j) + w) % p;
    }
    verdicts.push_back(stress.rank() == n - 3);
  }
  return verdicts;
}

bool global_rigidity_oracle(const Graph& g, int trials, std::uint64_t seed) {
  if (g.n() < 4) throw std::domain_error("global_rigidity_oracle needs n >= 4");
  if (trials < 1) throw std::domain_error("global_rigidity_oracle needs at least one trial");
  if (!is_rigid_numeric(g, 3, derive_seed(seed, 0xf1e8))) throw std::domain_error("global_rigidity_oracle: graph is flexible");
  auto v = global_rigidity_trials(g, trials, seed);
  auto yes = std::count(v.begin(), v.end(), true);
  return 2 * yes > static_cast<long>(v.size());
}

}  // namespace rigidlines
