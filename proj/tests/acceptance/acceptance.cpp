// Runs every acceptance criterion at full size and prints one PASS/FAIL line
// per criterion. Exit status is nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "oracles.hpp"
#include "rigidlines/henneberg.hpp"
#include "rigidlines/sparsity.hpp"
#include "rigidlines/verify.hpp"

using namespace rigidlines;

namespace {

constexpr double kBudgetSeconds = 60.0;
constexpr std::uint64_t kSeed = 20240601;

struct Outcome {
  bool pass = false;
  std::string detail;
};

Outcome from_suite(const SuiteReport& r) {
  std::string d = std::to_string(r.passed) + "/" + std::to_string(r.total);
  if (!r.failures.empty()) {
    const auto& f = r.failures.front();
    d += "; first failure " + f.instance + " seed " + std::to_string(f.seed) + ": " + f.detail;
  }
  return {r.ok(), d};
}

Outcome suite(const std::string& name, int n_max = 10) {
  SuiteOptions o;
  o.seed = kSeed;
  o.n_max = n_max;
  return from_suite(run_suite(name, o));
}

Outcome sparsity_oracle() {
  int total = 0, agree = 0;
  std::string first;
  auto check = [&](const std::string& name, const Graph& g) {
    ++total;
    int fast = sparsity_rank(g).rank, slow = testing::brute_sparsity_rank(g);
    if (fast == slow)
      ++agree;
    else if (first.empty())
      first = name + ": pebble game " + std::to_string(fast) + ", brute force " + std::to_string(slow);
  };
  for (const auto& [name, g] : standard_catalog(7, kSeed))
    if (g.n() >= 2) check(name, g);
  for (std::uint64_t k = 0; k < 200; ++k) {
    auto rng = make_rng(kSeed, k);
    int n = static_cast<int>(uniform_int(rng, 2, 7));
    double p = uniform_real(rng, 0.15, 0.9);
    check("random(" + std::to_string(k) + ")", testing::random_graph(n, p, rng()));
  }
  std::string d = std::to_string(agree) + "/" + std::to_string(total);
  if (!first.empty()) d += "; " + first;
  return {agree == total, d};
}

Outcome round_trips() {
  int total = 0, ok = 0;
  std::string first;
  auto note = [&](bool pass, const std::string& what) {
    ++total;
    ok += pass;
    if (!pass && first.empty()) first = what;
  };
  for (std::uint64_t k = 0; k < 100; ++k) {
    auto s = derive_seed(kSeed, 500 + k);
    int n = 2 + static_cast<int>(k % 11);
    auto g = laman_random(n, s);
    auto seq = extract_henneberg(g);
    note(seq.steps.size() == static_cast<std::size_t>(n - 2) && replay_matches(apply_henneberg(seq.steps), seq.relabel, g),
         "henneberg laman_random(" + std::to_string(n) + "," + std::to_string(s) + ")");
  }
  for (const auto& [name, g] : standard_catalog(8, kSeed)) {
    if (g.n() < 4 || !is_hendrickson(g)) continue;
    auto seq = extract_jj(g);
    note(replay_matches(apply_jj(seq.steps), seq.relabel, g), "jj " + name);
  }
  std::string d = std::to_string(ok) + "/" + std::to_string(total);
  if (!first.empty()) d += "; first failure " + first;
  return {ok == total && total > 100, d};
}

}  // namespace

int main() {
  struct Criterion {
    const char* label;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {"1 sparsity rank = brute-force oracle (catalog n<=7 + 200 random)", sparsity_oracle},
      {"2 Laman line systems certify local dim 2n+3 (50 graphs, exact + floating)", [] { return suite("theorem-main"); }},
      {"3 flexible graphs: congruent pairs give local dim >= 2n+4 (20 graphs, exact)",
       [] { return suite("theorem-mainnec"); }},
      {"4 concurrent/parallel/coplanar families have full column rank (n<=10, 20 seeds)",
       [] { return suite("lemma-complete"); }},
      {"5 transversal family dimension matches classify_triple (100 per class)", [] { return suite("lemma-3lines"); }},
      {"6 pairwise-meeting quadruples are concurrent or coplanar (1e4)", [] { return suite("four-lines"); }},
      {"7 distance/incidence and rotation/reflection recovery (1e5 each)", [] { return suite("lemma-cong"); }},
      {"8 is_hendrickson = stress oracle on catalog n<=8 (5 trials)", [] { return suite("hendrickson-oracle", 8); }},
      {"9 Henneberg (100 Laman, n<=12) and JJ (catalog n<=8) round trips", round_trips},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool pass = o.pass && secs < kBudgetSeconds;
    if (o.pass && !pass) o.detail += "; over the time budget";
    failed += !pass;
    std::printf("[%s] %s: %s (%.2fs)\n", pass ? "PASS" : "FAIL", c.label, o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed, std::size(criteria));
  return failed ? 1 : 0;
}
