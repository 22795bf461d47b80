#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "chaoslab/analysis.hpp"
#include "chaoslab/finite_engine.hpp"
#include "chaoslab/fort.hpp"
#include "chaoslab/iterated.hpp"

namespace chaoslab {

struct SuiteResult {
  std::string name;
  int instances{0};
  long long checks{0};
  bool ok{true};
  std::string counterexample;

  void fail(const std::string& why) {
    if (ok) {
      ok = false;
      counterexample = why;
    }
  }
};

/// Deterministic random instances for the law suites. Semigroups come from
/// closing random self-maps, so every sample is a genuine transformation
/// semigroup with its natural action.
class InstanceSampler {
 public:
  explicit InstanceSampler(std::uint64_t seed) : rng_(seed) {}

  std::mt19937_64& rng() { return rng_; }
  int uniform(int lo, int hi);

  /// Closure of 1-2 random self-maps on a random domain; retries when the
  /// closure busts `size_max`, falling back to the trivial monoid.
  GeneratedSemigroup semigroup(int domain_max, int size_max);

  /// Natural action of a sampled semigroup.
  FiniteAction action(int phase_max, int semigroup_max);

  std::vector<int> subset(int n);
  std::vector<int> subset_of(const std::vector<int>& universe);

  /// A random invariant equivalence on the action's phase set, built by
  /// seeding a few pairs and closing under symmetry, transitivity and the
  /// action.
  PairRelation invariant_equivalence(const FiniteAction& action);

  /// A nonempty action-closed subset of the phase set.
  std::vector<int> invariant_subset(const FiniteAction& action);

  /// Random map with the discrete metric or a random rational metric with
  /// values in [1, 2] (triangle-safe).
  IteratedSystem iterated(int phase_max, bool random_metric);

 private:
  std::mt19937_64 rng_;
};

/// Independent scrambled-set oracle: full subset enumeration, best size
/// first, lexicographically smallest among ties. Phase size <= 16.
std::vector<int> exhaustive_max_scrambled(const FiniteAction& action,
                                          const IdealSpec& ideal);

/// Every action of the semigroup on a fresh phase set of the given size,
/// by enumerating all columns for the non-identity elements and filtering
/// to homomorphisms. Candidate count is capped.
std::vector<FiniteAction> enumerate_actions(const FiniteSemigroup& semigroup,
                                            int phase_size,
                                            long long candidate_cap = 2000000);

/// Restriction of an action to an invariant subset, with the subset order
/// giving the new phase indexing.
FiniteAction subaction(const FiniteAction& action,
                       const std::vector<int>& invariant_points);

/// Cross-module oracle: (X, f) as a finite action of the monoid of map
/// powers, with the pre-periodic powers as the ideal carrier. Its Prox and
/// Asym must match the trajectory-level decisions pair for pair.
bool truncated_monoid_agrees(const IteratedSystem& sys, std::string* why);

// Law suites. Each returns pass/fail with the first counterexample.
SuiteResult suite_section3(std::uint64_t seed, int budget);
SuiteResult suite_product(std::uint64_t seed, int budget);
SuiteResult suite_prox_union(std::uint64_t seed, int semigroup_count,
                             int phase_max = 4, int semigroup_max = 3);
SuiteResult suite_claims(std::uint64_t seed, int random_metric_budget,
                         int exhaustive_phase_max = 4);
SuiteResult suite_fort_oracle(long long coefficient_box, long long window,
                              long long bound);
SuiteResult suite_fort_structure(long long coefficient_box);
SuiteResult suite_scrambled_exact(std::uint64_t seed, int budget,
                                  int phase_max = 10);

/// CLI entry: suite ∈ {section3, product, fort-oracle, claims, all}.
/// Exit code 1 when a counterexample shows up.
Report run_verify(const std::string& suite, std::uint64_t seed, int budget);

}  // namespace chaoslab
