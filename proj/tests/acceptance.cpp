// One line per acceptance criterion. Exits nonzero if any criterion fails,
// except those named with --known-failure N, which must still fail.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <set>
#include <string>

#include "zzc/verify/suites.hpp"

int main(int argc, char** argv) {
  std::set<int> known;
  for (int i = 1; i < argc; ++i) {
    if (std::string(argv[i]) == "--known-failure" && i + 1 < argc) {
      known.insert(std::atoi(argv[++i]));
    } else {
      std::fprintf(stderr, "usage: acceptance [--known-failure N]...\n");
      return 2;
    }
  }
  using Clock = std::chrono::steady_clock;
  const zzc::verify::SuiteConfig cfg;
  using Suite = zzc::verify::SuiteResult (*)(const zzc::verify::SuiteConfig&);
  const Suite suites[] = {
      zzc::verify::check_decomposition_oracle, zzc::verify::check_monotone_persistence,
      zzc::verify::check_augmented_ranks,      zzc::verify::check_pushforward,
      zzc::verify::check_k0_additivity,        zzc::verify::check_euler_identity,
      zzc::verify::check_delta_descent,        zzc::verify::check_set_k0,
      zzc::verify::check_weak_equivalence,     zzc::verify::check_index_augmented,
  };
  int failed = 0;
  int unexpected = 0;
  for (auto suite : suites) {
    const auto start = Clock::now();
    const auto r = suite(cfg);
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
    std::printf("%s [%lld ms]\n", zzc::verify::format_result(r).c_str(), static_cast<long long>(ms));
    std::fflush(stdout);
    if (!r.passed()) ++failed;
    if (r.passed() == known.contains(r.criterion)) {
      ++unexpected;
      std::printf("  criterion %d %s unexpectedly\n", r.criterion, r.passed() ? "passed" : "failed");
    }
  }
  std::printf("%d of 10 criteria passed\n", 10 - failed);
  if (!known.empty()) std::printf("%zu known failure(s) expected\n", known.size());
  return unexpected == 0 ? 0 : 1;
}
