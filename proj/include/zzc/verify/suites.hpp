#pragma once

// Randomized checks of the structural identities, one suite per
// acceptance criterion.

#include <cstdint>
#include <string>
#include <vector>

namespace zzc::verify {

struct SuiteConfig {
  std::uint64_t seed = 20240607;
  std::size_t module_cases = 200;
  std::size_t filtration_cases = 50;
  std::size_t subdivision_cases = 100;
};

struct SuiteResult {
  int criterion = 0;
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;
  std::string note;  // extra diagnostics, printed when non-empty

  bool passed() const { return cases > 0 && failures == 0; }
};

SuiteResult check_decomposition_oracle(const SuiteConfig& cfg);
SuiteResult check_monotone_persistence(const SuiteConfig& cfg);
SuiteResult check_augmented_ranks(const SuiteConfig& cfg);
SuiteResult check_pushforward(const SuiteConfig& cfg);
SuiteResult check_k0_additivity(const SuiteConfig& cfg);
SuiteResult check_euler_identity(const SuiteConfig& cfg);
SuiteResult check_delta_descent(const SuiteConfig& cfg);
SuiteResult check_set_k0(const SuiteConfig& cfg);
SuiteResult check_weak_equivalence(const SuiteConfig& cfg);
SuiteResult check_index_augmented(const SuiteConfig& cfg);

/// All ten suites in criterion order.
std::vector<SuiteResult> run_all_suites(const SuiteConfig& cfg);

/// "PASS  3 augmented ranks agree (412 cases)" style line.
std::string format_result(const SuiteResult& r);

}  // namespace zzc::verify
