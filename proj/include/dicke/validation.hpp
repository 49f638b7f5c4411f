#pragma once

#include <functional>
#include <string>
#include <vector>

namespace dicke {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Runs every invariant check of the library. `on_result` (optional) is
/// called as each check finishes. Exceptions inside a check count as a
/// failure of that check.
std::vector<CheckResult> run_validation(const std::function<void(const CheckResult&)>& on_result = {});

/// Names of the checks in execution order.
std::vector<std::string> validation_check_names();

}  // namespace dicke
