#pragma once

#include <string>
#include <vector>

namespace efimov::acceptance {

struct CriterionResult {
  int id = 0;
  std::string key;
  std::string title;
  bool passed = false;
  std::string measured;   // human-readable measured values
  std::string tolerance;  // what was required
  double seconds = 0.0;
  double budget_seconds = 0.0;
};

struct CriterionInfo {
  int id;
  const char* key;
  const char* title;
  double budget_seconds;
};

const std::vector<CriterionInfo>& criteria();

// Runs one criterion; the runtime budget is part of the pass condition.
CriterionResult run_criterion(int id);

// Runs the criteria whose id or key matches one of `only` (all when empty).
// Throws std::invalid_argument for an unknown selector.
std::vector<CriterionResult> run(const std::vector<std::string>& only = {});

// "[PASS] 1 critical_mass  ...": one line per criterion.
std::string format_line(const CriterionResult& r);

}  // namespace efimov::acceptance
