// Acceptance gate: one PASS/FAIL line per criterion, exit 0 iff all pass.

#include <iostream>

#include "holdup/app/acceptance.hpp"

int main() {
  using namespace holdup::app;
  bool all_passed = true;
  for (const Criterion& c : acceptance_criteria()) {
    const CriterionResult r = run_criterion(c, AcceptanceOptions{});
    all_passed = all_passed && r.passed;
    std::cout << (r.passed ? "PASS" : "FAIL") << ' ' << r.id << ' ' << r.name << ": " << r.detail
              << std::endl;
  }
  return all_passed ? 0 : 1;
}
