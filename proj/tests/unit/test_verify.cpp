#include <doctest.h>

#include "rigidlines/verify.hpp"

using namespace rigidlines;

TEST_CASE("every suite passes at reduced size") {
  for (const auto& name : suite_names()) {
    CAPTURE(name);
    SuiteOptions o;
    o.seed = 3;
    o.n_max = 6;
    o.count = name == "lemma-complete" ? 3 : 20;
    auto r = run_suite(name, o);
    CHECK(r.ok());
    CHECK(r.failures.empty());
    auto j = suite_to_json(r);
    CHECK(j["suite"] == name);
    CHECK(j["passed"] == r.passed);
    CHECK(suite_to_text(r).find(name) != std::string::npos);
  }
  CHECK_THROWS_AS(run_suite("no-such-suite", SuiteOptions{}), std::invalid_argument);
}

TEST_CASE("suite output is deterministic") {
  SuiteOptions o;
  o.seed = 11;
  o.count = 10;
  o.n_max = 7;
  CHECK(suite_to_json(run_suite("theorem-main", o)).dump() == suite_to_json(run_suite("theorem-main", o)).dump());
}

TEST_CASE("family jacobians have full column rank") {
  std::vector<std::int64_t> conc{3, -2, 5, 1, 4, -7, 2, 9, -1, 6, 8, -3, 2};  // n = 5
  auto c = concurrent_family_jacobian(conc);
  CHECK(c.cols() == 13);
  CHECK(rank_exact(c) == 13);
  auto p = parallel_family_jacobian(5);
  CHECK(p.cols() == 12);
  CHECK(rank_exact(p) == 12);
  std::vector<std::int64_t> cop{2, 3, -1, 4, 7, -2, 5, 1, 8, -6, 3, -4, 9};
  auto q = coplanar_family_jacobian(cop);
  CHECK(q.cols() == 13);
  CHECK(rank_exact(q) == 13);
}

TEST_CASE("transversal family dimension") {
  auto conc = transversal_family_dimension({0, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, 1);
  CHECK(conc.jacobian_dim == 2);
  CHECK(conc.cloud_dim == 2);
  auto skew = transversal_family_dimension({0, 0, 0, 0}, {1, 0, 0, 1}, {0, 1, -1, 0}, 1);
  CHECK(skew.jacobian_dim == 1);
  CHECK(skew.cloud_dim == 1);
}
