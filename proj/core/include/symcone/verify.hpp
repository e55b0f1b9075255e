#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace symcone {

struct SuiteResult {
  std::string name;
  std::size_t trials = 0;   // counted (non-vacuous) trials
  std::size_t skipped = 0;  // vacuous or resampled attempts
  std::vector<std::string> failures;  // capped diagnostics
  bool passed() const { return failures.empty(); }
};

// A suite runs `trials` seeded property checks (0 = the suite's default
// count, chosen to satisfy the strongest documented requirement).
using SuiteFn =
    std::function<SuiteResult(std::uint64_t seed, std::size_t trials)>;

// Registered property suites, in a fixed deterministic order:
//   duality_involution, pairing_nonneg, hilbert_oracle,
//   classification_totality, simplex_hull, insertion_hull, padding,
//   coordinate_deletion, rearrangement, support_reduction, interval_exchange,
//   monoid_norm_monotonicity, mw_transfer, restricted_dual_agreement,
//   equivariance.
const std::vector<std::pair<std::string, SuiteFn>>& suite_registry();

// Run one suite by name (throws std::invalid_argument for unknown names).
SuiteResult run_suite(const std::string& name, std::uint64_t seed,
                      std::size_t trials = 0);

// Run every registered suite with its default trial count.
std::vector<SuiteResult> run_all_suites(std::uint64_t seed);

}  // namespace symcone
