#pragma once

#include <string>
#include <vector>

namespace convdiff {

struct ScenarioResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Reproduces the worked examples (pentacle, S₃, ℤ, ℤ², diagonal, Boolean
/// examples) and reports each as pass/fail.
std::vector<ScenarioResult> run_reference_scenarios();

} // namespace convdiff
