#include "holdup/security_scope.hpp"

#include <cmath>

#include "holdup/error.hpp"

namespace holdup {

using detail::require;

namespace {

// (1 - p)^(k^gamma) computed through log1p so small p keeps its precision.
double escape_probability(std::int64_t k, double p, double gamma) {
  const double exponent = std::pow(static_cast<double>(k), gamma);
  return std::exp(exponent * std::log1p(-p));
}

void check_detection(std::int64_t k, double p, double gamma) {
  require(k >= 1, "k must be at least 1");
  require(std::isfinite(p) && p > 0.0 && p < 1.0, "p must lie in (0, 1)");
  require(std::isfinite(gamma) && gamma >= 1.0, "gamma must be at least 1");
}

}  // namespace

void validate(const SecurityParams& params) {
  check_detection(params.k, params.p, params.gamma);
  require(params.n >= params.k, "n must be at least k");
  require(std::isfinite(params.penalty) && params.penalty >= 0.0, "penalty C must be nonnegative");
  require(std::isfinite(params.fixed_cost) && params.fixed_cost >= 0.0,
          "fixed cost c must be nonnegative");
}

double detection_probability(std::int64_t k, double p, double gamma) {
  check_detection(k, p, gamma);
  return -std::expm1(std::pow(static_cast<double>(k), gamma) * std::log1p(-p));
}

double scope_threshold(const SecurityParams& params) {
  validate(params);
  if (params.penalty == 0.0) return 0.0;
  const double p_k = detection_probability(params.k, params.p, params.gamma);
  // Saturated detection (escape underflows to 0) secures any finite value.
  const double escape = escape_probability(params.k, params.p, params.gamma);
  return static_cast<double>(params.k) * p_k / escape * params.penalty;
}

bool ic_secure(double omega, const SecurityParams& params) {
  validate(params);
  require(std::isfinite(omega) && omega >= 0.0, "omega must be nonnegative");
  return omega <= scope_threshold(params);
}

ScopeResult evaluate_scope(double omega, const SecurityParams& params) {
  return {detection_probability(params.k, params.p, params.gamma), scope_threshold(params),
          ic_secure(omega, params)};
}

PenaltyEstimate estimate_penalty(double annual_revenue, double margin, double discount_rate,
                                 std::int64_t providers) {
  require(std::isfinite(discount_rate) && discount_rate > 0.0, "discount rate must be positive");
  require(providers >= 1, "providers must be at least 1");
  require(std::isfinite(annual_revenue) && annual_revenue >= 0.0, "revenue must be nonnegative");
  require(std::isfinite(margin) && margin >= 0.0 && margin <= 1.0, "margin must lie in [0, 1]");
  const double npv = annual_revenue * margin / discount_rate;
  return {annual_revenue, margin, discount_rate, providers, npv,
          npv / static_cast<double>(providers)};
}

}  // namespace holdup
