#pragma once

#include <string>
#include <vector>

namespace graphlaw {

// One acceptance criterion's outcome.  detail carries measured quantities
// (max errors, distances, counts) or an explanation of the failure.
struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  double seconds = 0.0;
  std::string detail;
};

// Runs acceptance criterion 1..12.  Deterministic: all randomness is
// internally seeded.  Criteria with runtime budgets (1, 2, 11) fail when
// the budget is exceeded.
CriterionResult run_criterion(int id);

std::vector<CriterionResult> run_all_criteria();

}  // namespace graphlaw
