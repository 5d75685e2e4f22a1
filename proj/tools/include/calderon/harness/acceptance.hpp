#pragma once

#include <string>
#include <vector>

namespace calderon::harness {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
  double time_limit = 0.0;
};

// Runs the acceptance criteria (all when `only` is empty). Each criterion
// passes only if its numerical checks hold and it finishes within its time
// limit. Module errors fail the criterion and are recorded in `detail`.
std::vector<CriterionResult> run_acceptance(const std::vector<int>& only = {});

inline constexpr int kCriterionCount = 10;

}  // namespace calderon::harness
