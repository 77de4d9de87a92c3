#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "rigidlines/elekes_sharir.hpp"
#include "rigidlines/exact.hpp"
#include "rigidlines/geometry.hpp"
#include "rigidlines/graph.hpp"
#include "rigidlines/random.hpp"

namespace rigidlines {

/// Integer embeddings for exact replays.
using IntEmbedding = std::vector<IntPoint2>;

/// Local dimension certificate at one sampled point.
///
/// local_dim = ambient_dim - jacobian_rank. `certified` means the constraint
/// Jacobian has full row rank there; only then is local_dim the dimension of
/// the solution set near the point.
struct DimensionReport {
  int ambient_dim = 0;
  int constraint_count = 0;
  int jacobian_rank = 0;
  int local_dim = 0;
  double tol = 0;
  bool certified = false;
  bool exact = false;
};

/// Singular values below tol * sigma_max * max(rows, cols) count as zero.
int numeric_rank(const Eigen::MatrixXd& m, double tol = kDefaultTol);

/// Squared edge lengths in canonical edge order.
Eigen::VectorXd edge_function(const Graph& g, const Embedding& p);

/// m x 2n Jacobian of edge_function: row e = {i,j} has 2(p_i - p_j) in the
/// columns of i and 2(p_j - p_i) in those of j.
Eigen::MatrixXd rigidity_matrix(const Graph& g, const Embedding& p);
IntMatrix rigidity_matrix(const Graph& g, const IntEmbedding& p);

/// Uniform integer coordinates in [-box, box].
IntEmbedding random_int_embedding(int n, Rng& rng, std::int64_t box = 10000);
Embedding to_embedding(const IntEmbedding& p);

/// Max rigidity-matrix rank over `trials` random integer embeddings, by SVD
/// or, with `exact`, by rank_exact.
int rigidity_rank(const Graph& g, int trials, std::uint64_t seed, bool exact = false);
bool is_rigid_numeric(const Graph& g, int trials, std::uint64_t seed, bool exact = false);

/// Residuals g(l_i, l_j) over the edges of g.
Eigen::VectorXd line_system_residuals(const Graph& g, std::span<const Line> lines);
/// Residuals divided by pair_scale.
Eigen::VectorXd line_system_relative_residuals(const Graph& g, std::span<const Line> lines);
/// m x 4n analytic Jacobian of the incidence system.
Eigen::MatrixXd line_system_jacobian(const Graph& g, std::span<const Line> lines);

/// Throws PreconditionError naming the worst edge if some incidence fails by
/// more than tol (relative).
DimensionReport line_system_dimension(const Graph& g, std::span<const Line> lines, double tol = kDefaultTol);
/// Exact counterpart on rational lines; requires every residual to be 0.
DimensionReport line_system_dimension_exact(const Graph& g, std::span<const ExactLine> lines);

/// m x 4n Jacobian of (p, p') -> f(p) - f(p').
Eigen::MatrixXd pair_system_jacobian(const Graph& g, const Embedding& p, const Embedding& p_prime);

/// Throws PreconditionError when f(p) != f(p') beyond tol (relative).
DimensionReport pair_system_dimension(const Graph& g, const Embedding& p, const Embedding& p_prime,
                                      double tol = kDefaultTol);

/// Per-trial stress-matrix verdicts (rank == n - 3), each trial computed
/// exactly over a random 61-bit prime field at a random integer embedding.
std::vector<bool> global_rigidity_trials(const Graph& g, int trials, std::uint64_t seed);

/// Majority of global_rigidity_trials. Throws std::domain_error when n < 4
/// or the graph is flexible.
bool global_rigidity_oracle(const Graph& g, int trials, std::uint64_t seed);

}  // namespace rigidlines
