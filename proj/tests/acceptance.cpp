// Acceptance suite runner: one PASS/FAIL line per criterion, exit 0 iff all
// criteria pass (2 otherwise, matching the CLI `check` subcommand).
#include <cstdio>
#include <iostream>

#include "recfront/selfcheck.hpp"

int main() {
  constexpr std::uint64_t kPinnedSeed = 0x5EEDBA5EBA11ull;
  std::printf("acceptance suite, master seed %llu\n",
              static_cast<unsigned long long>(kPinnedSeed));
  const recfront::SelfCheckReport report = recfront::run_acceptance_suite(kPinnedSeed, &std::cout);
  int passed = 0;
  for (const auto& c : report.criteria) passed += c.passed ? 1 : 0;
  std::printf("%d/%zu criteria passed\n", passed, report.criteria.size());
  return report.all_passed ? 0 : 2;
}
