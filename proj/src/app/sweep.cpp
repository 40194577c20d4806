#include "holdup/app/sweep.hpp"

#include <cmath>
#include <string>

#include "holdup/error.hpp"
#include "holdup/quadrature.hpp"

namespace holdup::app {

SweepParameter parse_sweep_parameter(std::string_view name) {
  for (SweepParameter p : {SweepParameter::EB, SweepParameter::Theta, SweepParameter::Alpha0,
                           SweepParameter::D, SweepParameter::K, SweepParameter::P,
                           SweepParameter::Gamma, SweepParameter::C}) {
    if (to_string(p) == name) return p;
  }
  throw ConfigError("unknown sweep parameter '" + std::string(name) + "'");
}

std::string_view to_string(SweepParameter p) {
  switch (p) {
    case SweepParameter::EB: return "e_b";
    case SweepParameter::Theta: return "theta";
    case SweepParameter::Alpha0: return "alpha0";
    case SweepParameter::D: return "d";
    case SweepParameter::K: return "k";
    case SweepParameter::P: return "p";
    case SweepParameter::Gamma: return "gamma";
    case SweepParameter::C: return "C";
  }
  return "?";
}

bool is_security_parameter(SweepParameter p) {
  return p == SweepParameter::K || p == SweepParameter::P || p == SweepParameter::Gamma ||
         p == SweepParameter::C;
}

void validate(const SweepSpec& spec) {
  if (!(std::isfinite(spec.from) && std::isfinite(spec.to) && spec.from < spec.to)) {
    throw ConfigError("sweep needs finite from < to");
  }
  if (spec.steps < 2) throw ConfigError("sweep needs at least 2 steps");
  if (spec.parameter == SweepParameter::K) {
    for (double v : sweep_grid(spec)) {
      if (v != std::round(v)) throw ConfigError("k sweep must land on whole numbers");
    }
  }
}

std::vector<double> sweep_grid(const SweepSpec& spec) {
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(spec.steps));
  // Multiply before dividing so round grid values (0.4 on a 0.02 grid) come
  // out exact.
  const double span = spec.to - spec.from;
  for (int i = 0; i + 1 < spec.steps; ++i) {
    grid.push_back(spec.from + span * static_cast<double>(i) / static_cast<double>(spec.steps - 1));
  }
  grid.push_back(spec.to);
  return grid;
}

std::optional<double> closed_form_if_applicable(double theta, const ErrorModel& errors,
                                                bool cap_enabled) {
  if (!cap_enabled || errors.buffer_d != 0.0 || errors.e_s_max != 0.0) return std::nullopt;
  if (std::abs(errors.e_b_half_range - 2.0 * theta) > 1e-5) return std::nullopt;
  return expected_buyer_payoff_closed(theta);
}

std::vector<PayoffRow> payoff_sweep(const SweepSpec& spec, const PayoffBase& base,
                                    const McOptions& options) {
  validate(spec);
  if (is_security_parameter(spec.parameter)) throw ConfigError("not a payoff parameter");
  std::vector<bool> caps;
  if (spec.cap_variants) {
    caps = {true, false};
  } else {
    caps = {base.cap_enabled};
  }

  std::vector<PayoffRow> rows;
  for (double v : sweep_grid(spec)) {
    MarketParams market = base.market;
    ErrorModel errors = base.errors;
    switch (spec.parameter) {
      case SweepParameter::EB: errors.e_b_half_range = v; break;
      case SweepParameter::Theta: market = market_from_share(v); break;
      case SweepParameter::Alpha0: market = market_from_alpha0(v); break;
      case SweepParameter::D: errors.buffer_d = v; break;
      default: break;
    }
    if (base.tie_e_b) errors.e_b_half_range = 2.0 * market.theta;
    validate(errors);
    for (bool cap : caps) {
      PayoffRow row;
      row.value = v;
      row.cap_enabled = cap;
      row.market = market;
      row.errors = errors;
      row.mc = estimate_buyer_payoff(PayoffScenario{market, errors, cap}, options);
      if (errors.e_s_max == 0.0) {
        row.quadrature = quadrature_buyer_payoff(market.theta, errors.e_b_half_range,
                                                 errors.buffer_d, cap);
      }
      row.closed_form = closed_form_if_applicable(market.theta, errors, cap);
      rows.push_back(row);
    }
  }
  return rows;
}

std::vector<ScopeRow> scope_sweep(const SweepSpec& spec, const SecurityParams& base) {
  validate(spec);
  if (!is_security_parameter(spec.parameter)) throw ConfigError("not a security parameter");
  std::vector<ScopeRow> rows;
  for (double v : sweep_grid(spec)) {
    SecurityParams sp = base;
    switch (spec.parameter) {
      case SweepParameter::K:
        sp.k = static_cast<std::int64_t>(v);
        sp.n = std::max(sp.n, sp.k);
        break;
      case SweepParameter::P: sp.p = v; break;
      case SweepParameter::Gamma: sp.gamma = v; break;
      case SweepParameter::C: sp.penalty = v; break;
      default: break;
    }
    const double phi = scope_threshold(sp);
    rows.push_back({v, sp, detection_probability(sp.k, sp.p, sp.gamma), phi});
  }
  return rows;
}

}  // namespace holdup::app
