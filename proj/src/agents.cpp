#include "holdup/agents.hpp"

#include <algorithm>
#include <cmath>

#include "holdup/error.hpp"

namespace holdup {

using detail::require;

void validate(const ErrorModel& errors) {
  require(std::isfinite(errors.e_b_half_range) && errors.e_b_half_range >= 0.0,
          "buyer error half-range must be nonnegative");
  require(std::isfinite(errors.e_s_max) && errors.e_s_max >= 0.0,
          "seller underdisclosure bound must be nonnegative");
  require(std::isfinite(errors.buffer_d) && errors.buffer_d >= 0.0,
          "overpayment buffer must be nonnegative");
}

bool minimally_separated(const ErrorModel& errors, double theta) {
  return errors.e_b_half_range < 2.0 * theta;
}

double default_budget_cap(double theta, double phi) {
  require(theta >= 0.0 && phi >= 0.0, "theta and phi must be nonnegative");
  return theta * std::min(1.0, phi);
}

BuyerAgentConfig make_buyer_config(double theta, double phi, const ErrorModel& errors,
                                   bool cap_enabled) {
  validate(errors);
  return {theta, default_budget_cap(theta, phi), errors.buffer_d, cap_enabled};
}

double seller_disclose(double omega, double phi, const SellerAgentConfig& config, double eps_s) {
  require(std::isfinite(eps_s) && eps_s >= 0.0,
          "seller disclosure error must be nonnegative (underdisclosure only)");
  require(omega >= 0.0 && phi >= 0.0, "omega and phi must be nonnegative");
  require(config.omega_agent_cap >= 0.0 && config.omega_agent_cap <= omega,
          "agent disclosure cap must lie in [0, omega]");
  const double ceiling = std::min({omega, phi, config.omega_agent_cap});
  return std::max(0.0, ceiling - eps_s);
}

double buyer_offer(double omega_tilde, const BuyerAgentConfig& config, double e_b) {
  double offer = config.theta * omega_tilde + config.buffer_d + e_b;
  if (config.cap_enabled) offer = std::min(offer, config.budget_cap);
  return std::max(0.0, offer);
}

bool seller_accept(double offer, double omega_tilde, double theta) {
  return offer >= theta * omega_tilde;
}

}  // namespace holdup
