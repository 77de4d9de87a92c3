#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rigidlines/io.hpp"

namespace rigidlines {

struct SuiteOptions {
  std::uint64_t seed = 0;
  double tol = kDefaultTol;
  int n_max = 10;
  int count = -1;         // instances; -1 picks the suite default
  int oracle_trials = 5;  // hendrickson-oracle only
};

struct InstanceFailure {
  std::string instance;
  std::uint64_t seed = 0;
  std::string detail;
};

struct SuiteReport {
  explicit SuiteReport(std::string name = {}) : suite(std::move(name)) {}

  std::string suite;
  int total = 0;
  int passed = 0;
  std::vector<InstanceFailure> failures;
  Json stats = Json::object();

  bool ok() const { return total > 0 && passed == total; }
  void record(bool pass, const std::string& instance, std::uint64_t seed, const std::string& detail);
};

Json suite_to_json(const SuiteReport& r);
std::string suite_to_text(const SuiteReport& r);

const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown name.
SuiteReport run_suite(const std::string& name, const SuiteOptions& opts);

/// Laman graphs: constructive + projected line samples certify local
/// dimension 2n+3, exactly (rational sample) and in floating point.
SuiteReport verify_theorem_main(const SuiteOptions& opts);
/// Flexible graphs: congruent pairs have pair-system rank <= 2n-4.
SuiteReport verify_theorem_mainnec(const SuiteOptions& opts);
/// Concurrent, parallel and coplanar parametrizations of complete-graph
/// configurations have full column rank.
SuiteReport verify_lemma_complete(const SuiteOptions& opts);
/// Dimension of the lines meeting three given lines matches classify_triple.
SuiteReport verify_lemma_3lines(const SuiteOptions& opts);
/// Point-pair transform: distances versus incidences, rotations and
/// reflections from concurrent and coplanar lines.
SuiteReport verify_lemma_cong(const SuiteOptions& opts);
/// Four pairwise-meeting lines are concurrent or coplanar.
SuiteReport verify_four_lines(const SuiteOptions& opts);
/// is_hendrickson against the stress-matrix oracle on the catalog.
SuiteReport verify_hendrickson_oracle(const SuiteOptions& opts);

/// Integer parametrization Jacobians (rows scaled to clear denominators).
IntMatrix concurrent_family_jacobian(std::span<const std::int64_t> params);
IntMatrix parallel_family_jacobian(int n);
IntMatrix coplanar_family_jacobian(std::span<const std::int64_t> params);

/// Dimension of {lines meeting l1, l2, l3} near a sampled member, by two
/// routes: incidence-Jacobian corank at the member and the rank of a cloud
/// of projected perturbations.
struct TransversalFamilyDim {
  int jacobian_dim = -1;
  int cloud_dim = -1;
  Line base;
};
TransversalFamilyDim transversal_family_dimension(const Line& l1, const Line& l2, const Line& l3, std::uint64_t seed);

}  // namespace rigidlines
