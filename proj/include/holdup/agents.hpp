#pragma once

// Buyer and seller agent policies. Agents are deterministic functions of
// their configuration and an injected error draw; sampling lives elsewhere.

namespace holdup {

/// Agent noise. Buyer payment error is uniform on [-e_b, e_b]; seller
/// underdisclosure is uniform on [0, e_s]; d is added to every intended payment.
struct ErrorModel {
  double e_b_half_range = 0.0;
  double e_s_max = 0.0;
  double buffer_d = 0.0;
};

void validate(const ErrorModel& errors);

/// e_b < 2 * theta. Configurations outside it are allowed but pool seller
/// types and are reported as degenerate.
bool minimally_separated(const ErrorModel& errors, double theta);

struct BuyerAgentConfig {
  double theta = 0.5;
  double budget_cap = 0.5;
  double buffer_d = 0.0;
  bool cap_enabled = true;
};

struct SellerAgentConfig {
  double omega_agent_cap = 0.0;  // most the seller lets her agent reveal
  double theta = 0.5;
};

/// theta * min(1, phi): enough to pay the highest type when there is no noise.
double default_budget_cap(double theta, double phi);

BuyerAgentConfig make_buyer_config(double theta, double phi, const ErrorModel& errors,
                                   bool cap_enabled);

/// max(0, min(omega, phi, cap) - eps_s). Throws DomainError for eps_s < 0:
/// an agent cannot reveal more than its principal holds.
double seller_disclose(double omega, double phi, const SellerAgentConfig& config, double eps_s);

/// theta * omega_tilde + d + e_b, truncated at the budget when the cap is on
/// and floored at zero.
double buyer_offer(double omega_tilde, const BuyerAgentConfig& config, double e_b);

/// Accept iff offer >= theta * omega_tilde; ties trade.
bool seller_accept(double offer, double omega_tilde, double theta);

}  // namespace holdup
