#pragma once

// The acceptance suite: eleven exact checks, each with a wall-clock budget.

#include <functional>
#include <string>
#include <vector>

namespace coxforge {

enum class Profile { Quick, Full };

Profile parse_profile(const std::string& text);
std::string to_string(Profile p);

struct CheckResult {
  int id = 0;
  std::string title;
  std::string expected;
  std::string computed;
  double seconds = 0;
  double limit_seconds = 0;
  bool values_match = false;
  bool pass = false;  // values match and within the time budget
  std::vector<std::string> failures;  // first few offending inputs
};

inline constexpr int kCriterionCount = 11;

CheckResult run_criterion(int id, Profile profile);

/// Fixed report order 1..11; `on_result` sees each result as it completes.
std::vector<CheckResult> verify_all(Profile profile, const std::function<void(const CheckResult&)>& on_result = {});

}  // namespace coxforge
