#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rigidlines/elekes_sharir.hpp"
#include "rigidlines/exact.hpp"
#include "rigidlines/geometry.hpp"
#include "rigidlines/graph.hpp"
#include "rigidlines/numeric.hpp"

namespace rigidlines {

/// Gauss-Newton did not reach the requested residual.
class NonConvergence : public std::runtime_error {
 public:
  NonConvergence(double residual, int iterations)
      : std::runtime_error("Gauss-Newton did not converge after " + std::to_string(iterations) +
                           " iterations (relative residual " + std::to_string(residual) + ")"),
        residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

/// All sampling attempts were rejected; log() holds one entry per attempt.
class SamplingError : public std::runtime_error {
 public:
  SamplingError(const std::string& what, std::vector<std::string> log)
      : std::runtime_error(what), log_(std::move(log)) {}
  const std::vector<std::string>& log() const { return log_; }

 private:
  std::vector<std::string> log_;
};

struct Projection {
  LineConfig lines;
  int iterations = 0;
  double residual = 0;  // max relative incidence residual
};

/// Least-norm Gauss-Newton onto the incidence system of g. Lines flagged in
/// `fixed` are held constant. Stops once every relative residual is <= tol.
Projection gauss_newton_project(const Graph& g, const LineConfig& x0, double tol = 1e-12, int max_iter = 50,
                                const std::vector<bool>& fixed = {});

struct LamanSample {
  LineConfig lines;
  DimensionReport report;  // floating certificate at `lines`
  int attempts = 0;
  std::vector<std::string> retry_log;
};

/// Rational realization of a Laman graph built along its Henneberg
/// sequence: K2 from two meeting integer lines, ext0 by joining integer
/// points of the two lines, ext1 by a transversal through an integer point
/// of the third line. Degenerate draws are resampled locally.
ExactLineConfig sample_laman_lines_exact(const Graph& g, std::uint64_t seed, int max_retries = 32);

/// Constructive sample, randomly perturbed and projected back onto the
/// incidence system, then certified. Throws SamplingError with the retry
/// log when no attempt certifies.
LamanSample sample_laman_lines_report(const Graph& g, std::uint64_t seed, int max_retries = 32);
LineConfig sample_laman_lines(const Graph& g, std::uint64_t seed, int max_retries = 32);

enum class FamilyKind { concurrent, parallel, coplanar };
std::string family_kind_name(FamilyKind kind);
FamilyKind parse_family_kind(const std::string& name);

/// n pairwise-distinct lines all meeting each other.
LineConfig sample_knn(int n, FamilyKind kind, std::uint64_t seed);

/// Integer point set p and its image under a random rigid motion built
/// from a Pythagorean rotation and an integer translation.
struct CongruentPair {
  Embedding p, p_prime;
  IntEmbedding p_int;
  IntEmbedding p_prime_scaled;  // denominator * p_prime, integral
  std::int64_t denominator = 1;
  int orientation = 1;
};

CongruentPair sample_congruent_pair(int n, int orientation, std::uint64_t seed, bool collinear = false);
CongruentPair sample_congruent_pair(const Graph& g, int orientation, std::uint64_t seed, bool collinear = false);

/// Pair-system Jacobian with the p' block scaled by the denominator; same
/// rank as pair_system_jacobian, integral entries.
IntMatrix pair_system_jacobian_int(const Graph& g, const CongruentPair& pair);

}  // namespace rigidlines
