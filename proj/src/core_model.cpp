#include "holdup/core_model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "holdup/error.hpp"

namespace holdup {

using detail::require;

namespace {

void check_alpha0(double alpha0) {
  if (!(alpha0 > 0.0 && alpha0 <= 1.0)) {
    throw DomainError("alpha0 must lie in (0, 1], got " + std::to_string(alpha0));
  }
}

void check_disclosure(double omega, double omega_hat) {
  require(std::isfinite(omega_hat) && omega_hat >= 0.0, "disclosure must be nonnegative");
  require(omega_hat <= omega, "cannot disclose more than the seller holds");
}

}  // namespace

double equilibrium_share(double alpha0) {
  check_alpha0(alpha0);
  return (1.0 + alpha0) / 2.0;
}

MarketParams market_from_alpha0(double alpha0) {
  return MarketParams{alpha0, equilibrium_share(alpha0), false};
}

MarketParams market_from_share(double theta) {
  if (!(theta > 0.0 && theta < 1.0)) {
    throw DomainError("theta must lie in (0, 1), got " + std::to_string(theta));
  }
  return MarketParams{std::max(0.0, 2.0 * theta - 1.0), theta, true};
}

void validate_seller_type(double omega) {
  if (!(omega >= 0.0 && omega < 1.0)) {
    throw DomainError("omega must lie in [0, 1), got " + std::to_string(omega));
  }
}

PayoffPair invest_payoffs(double omega, double omega_hat, double price, double alpha0) {
  check_alpha0(alpha0);
  check_disclosure(omega, omega_hat);
  require(std::isfinite(price) && price >= 0.0, "price must be nonnegative");
  return detail::invest_terms(omega, omega_hat, price, alpha0);
}

PayoffPair expropriate_payoffs(double omega, double omega_hat, double alpha0) {
  check_alpha0(alpha0);
  check_disclosure(omega, omega_hat);
  return {alpha0 * (omega - omega_hat), omega_hat};
}

PayoffPair baseline_equilibrium(double omega, double alpha0) {
  check_alpha0(alpha0);
  validate_seller_type(omega);
  return detail::baseline_terms(omega, alpha0);
}

BargainSplit split_at_share(double omega_hat, double theta) {
  require(std::isfinite(omega_hat) && omega_hat >= 0.0, "omega_hat must be nonnegative");
  require(std::isfinite(theta) && theta >= 0.0 && theta <= 1.0, "theta must lie in [0, 1]");
  const double seller = theta * omega_hat;
  // Buyer's share is taken as the remainder so the split conserves omega_hat.
  return {seller, omega_hat - seller, seller};
}

BargainSplit nash_bargain(double omega_hat, double alpha0) {
  return split_at_share(omega_hat, equilibrium_share(alpha0));
}

double optimal_disclosure(double omega, double phi) {
  require(omega >= 0.0 && phi >= 0.0, "omega and phi must be nonnegative");
  return std::min(omega, phi);
}

}  // namespace holdup
