#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace ribbonkit {

struct CheckOutcome {
  bool passed = false;
  std::string detail;
};

struct AcceptanceCheck {
  int id;
  std::string key;
  std::string title;
  std::function<CheckOutcome()> run;
};

struct CheckResult {
  int id = 0;
  std::string key;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

const std::vector<AcceptanceCheck>& acceptance_checks();

// Runs the checks whose id, key or title contains `filter` (all when empty). A check that
// throws is reported as failed with the error message as detail.
std::vector<CheckResult> run_acceptance(std::string_view filter = {});

}  // namespace ribbonkit
