#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace recfront {

struct CriterionResult {
  int index = 0;
  std::string name;
  bool passed = false;
  double seconds = 0.0;
  std::string detail;
};

struct SelfCheckReport {
  std::vector<CriterionResult> criteria;
  bool all_passed = false;
};

// Runs the ten acceptance criteria in order, printing one PASS/FAIL line
// per criterion to `progress` (may be null) as each completes.  Tolerances
// and runtime budgets are pinned in the implementation.
SelfCheckReport run_acceptance_suite(std::uint64_t master_seed, std::ostream* progress);

}  // namespace recfront
