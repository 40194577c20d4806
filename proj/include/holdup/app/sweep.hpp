#pragma once

// Parameter sweeps over a uniform grid: buyer payoff curves (Monte Carlo
// next to the quadrature oracle and, where it applies, the closed form) or
// the security scope.

#include <optional>
#include <string_view>
#include <vector>

#include "holdup/agents.hpp"
#include "holdup/core_model.hpp"
#include "holdup/montecarlo.hpp"
#include "holdup/security_scope.hpp"

namespace holdup::app {

enum class SweepParameter { EB, Theta, Alpha0, D, K, P, Gamma, C };

SweepParameter parse_sweep_parameter(std::string_view name);
std::string_view to_string(SweepParameter p);
bool is_security_parameter(SweepParameter p);

struct SweepSpec {
  SweepParameter parameter = SweepParameter::EB;
  double from = 0.0;
  double to = 1.0;
  int steps = 2;
  bool cap_variants = false;  // emit cap-on and cap-off rows per grid value
};

/// Throws ConfigError unless from < to and steps >= 2 (and, for k, every grid
/// value is a whole number).
void validate(const SweepSpec& spec);

/// steps points from `from` to `to`, both endpoints exact.
std::vector<double> sweep_grid(const SweepSpec& spec);

/// Closed form (6 - 11 theta) / 24 when the scenario is its regime:
/// E_b = 2 theta (to 1e-5), no buffer, no seller error, cap on.
std::optional<double> closed_form_if_applicable(double theta, const ErrorModel& errors,
                                                bool cap_enabled);

struct PayoffBase {
  MarketParams market;
  ErrorModel errors;
  bool cap_enabled = true;
  bool tie_e_b = false;  // E_b follows 2 theta as theta or alpha0 moves
};

struct PayoffRow {
  double value = 0.0;
  bool cap_enabled = true;
  MarketParams market;
  ErrorModel errors;
  McEstimate mc;
  std::optional<double> quadrature;  // only without seller error
  std::optional<double> closed_form;
};

/// Every grid value reuses the same seed, so rows share random numbers.
std::vector<PayoffRow> payoff_sweep(const SweepSpec& spec, const PayoffBase& base,
                                    const McOptions& options);

struct ScopeRow {
  double value = 0.0;
  SecurityParams params;
  double p_k = 0.0;
  double phi = 0.0;
};

std::vector<ScopeRow> scope_sweep(const SweepSpec& spec, const SecurityParams& base);

}  // namespace holdup::app
