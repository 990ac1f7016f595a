// Acceptance gate: one line per criterion, exit code = number of failures.
// Grids and time limits are fixed; no arguments.

#include <iostream>

#include "cactus/verify.hpp"

int main() {
  using namespace cactus;
  const Budget budget;  // 1e8 steps, enough for every pinned grid
  std::vector<CheckResult> results;

  results.push_back(check_delta_closed_forms(8, 3));
  results.push_back(check_formula_vs_oracle(default_formula_grid(), budget));
  results.push_back(check_jackson(default_formula_grid(), 10, budget));
  results.push_back(check_bijection_roundtrip(default_bijection_grid(), budget));
  results.push_back(check_tree_enumeration(3, 3, budget));
  results.push_back(check_worked_examples());
  results.push_back(check_partitioned_counts(default_formula_grid(), budget));
  results.push_back(check_theorem2({{2, 3}, {3, 3}}, budget));

  int failures = 0;
  for (size_t i = 0; i < results.size(); ++i) {
    const CheckResult& res = results[i];
    std::cout << (res.pass ? "[PASS] " : "[FAIL] ") << "criterion " << i + 1 << " (" << res.name
              << "): " << res.detail << " [" << res.ms << " ms]\n";
    if (!res.pass) ++failures;
  }
  return failures;
}
