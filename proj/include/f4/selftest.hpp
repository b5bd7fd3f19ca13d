#pragma once

#include <string>
#include <vector>

namespace f4::selftest {

struct CriterionResult {
  int number = 0;
  std::string title;
  bool pass = false;
  double seconds = 0.0;
  std::string detail;  // failure detail, empty on pass
};

// Runs the full verification suite (ten criteria).  Each criterion carries
// its own runtime bound, checked as part of the result.
std::vector<CriterionResult> run_all();

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace f4::selftest
