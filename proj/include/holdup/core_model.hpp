#pragma once

// Payoff and bargaining arithmetic for the disclosure/expropriation game.
//
// A seller holds an information good of value omega in [0, 1). Withholding
// leaves her alpha0 * omega; disclosing omega_hat to a buyer who can walk
// away with it exposes her to hold-up. Everything here is pure arithmetic.

namespace holdup {

/// Seller's retained-value fraction and the equilibrium share it induces.
///
/// Construct through market_from_alpha0() for a full market; the theta-only
/// factory exists for buyer-side analyses that sweep the share directly,
/// including shares below 1/2 that no alpha0 in (0, 1] can produce.
struct MarketParams {
  double alpha0 = 0.0;
  double theta = 0.5;
  bool share_only = false;  // theta was given directly; alpha0 is not meaningful
};

struct PayoffPair {
  double u_seller = 0.0;
  double u_buyer = 0.0;

  friend bool operator==(const PayoffPair&, const PayoffPair&) = default;
};

struct BargainSplit {
  double u_seller = 0.0;
  double u_buyer = 0.0;
  double price = 0.0;
};

/// theta = (1 + alpha0) / 2. Throws DomainError unless 0 < alpha0 <= 1.
double equilibrium_share(double alpha0);

/// Validated market with theta derived from alpha0.
MarketParams market_from_alpha0(double alpha0);

/// Share-only market for theta in (0, 1); alpha0 is set to max(0, 2*theta - 1).
MarketParams market_from_share(double theta);

void validate_seller_type(double omega);

/// Seller invests after disclosing omega_hat at price P.
PayoffPair invest_payoffs(double omega, double omega_hat, double price, double alpha0);

/// Buyer takes the disclosed omega_hat without paying.
PayoffPair expropriate_payoffs(double omega, double omega_hat, double alpha0);

/// Hold-up outcome: no disclosure, no sale.
PayoffPair baseline_equilibrium(double omega, double alpha0);

/// Symmetric Nash split of omega_hat with seller threat point alpha0 * omega_hat
/// and buyer threat point 0.
BargainSplit nash_bargain(double omega_hat, double alpha0);

/// The same split expressed through the seller's share: price = theta * omega_hat.
BargainSplit split_at_share(double omega_hat, double theta);

namespace detail {

// Unvalidated forms for callers that have already checked their inputs.
inline PayoffPair invest_terms(double omega, double omega_hat, double price, double alpha0) {
  return {price + alpha0 * (omega - omega_hat), omega_hat - price};
}
inline PayoffPair baseline_terms(double omega, double alpha0) { return {alpha0 * omega, 0.0}; }

}  // namespace detail

/// Disclosure level that maximizes the seller's payoff under security cap phi.
double optimal_disclosure(double omega, double phi);

}  // namespace holdup
