#pragma once

// The acceptance suite: numbered criteria, each a self-contained check that
// reports pass/fail with a one-line detail.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace holdup::app {

struct AcceptanceOptions {
  std::optional<std::uint64_t> samples;  // replaces every Monte Carlo sample size
  std::uint64_t seed = 1;
  unsigned workers = 0;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
};

struct Criterion {
  int id = 0;
  std::string name;
  std::function<CriterionResult(const AcceptanceOptions&)> run;
};

/// All criteria in id order.
const std::vector<Criterion>& acceptance_criteria();

/// An exception inside the check is reported as the criterion's failure.
CriterionResult run_criterion(const Criterion& criterion, const AcceptanceOptions& options);

/// Every criterion, in id order.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options);

}  // namespace holdup::app
