#include <cmath>
#include <random>

#include "doctest.h"
#include "holdup/core_model.hpp"
#include "holdup/error.hpp"

using namespace holdup;
using doctest::Approx;

TEST_CASE("equilibrium share") {
  CHECK(equilibrium_share(1.0) == 1.0);
  CHECK(equilibrium_share(1e-12) == Approx(0.5));
  CHECK(equilibrium_share(0.5) == 0.75);

  CHECK_THROWS_AS(equilibrium_share(0.0), DomainError);
  CHECK_THROWS_AS(equilibrium_share(-0.1), DomainError);
  CHECK_THROWS_AS(equilibrium_share(1.0000001), DomainError);
  CHECK_THROWS_AS(equilibrium_share(std::nan("")), DomainError);
}

TEST_CASE("market factories") {
  const MarketParams m = market_from_alpha0(0.2);
  CHECK(m.theta == Approx(0.6));
  CHECK_FALSE(m.share_only);

  const MarketParams s = market_from_share(0.3);
  CHECK(s.theta == 0.3);
  CHECK(s.alpha0 == 0.0);
  CHECK(s.share_only);
  CHECK(market_from_share(0.8).alpha0 == Approx(0.6));
  CHECK_THROWS_AS(market_from_share(1.0), DomainError);
  CHECK_THROWS_AS(market_from_share(0.0), DomainError);
}

TEST_CASE("invest payoffs") {
  const PayoffPair full = invest_payoffs(1.0, 1.0, 0.5, 0.5);
  CHECK(full.u_seller == 0.5);
  CHECK(full.u_buyer == 0.5);

  const PayoffPair partial = invest_payoffs(0.8, 0.5, 0.3, 0.5);
  CHECK(partial.u_seller == Approx(0.45));
  CHECK(partial.u_buyer == Approx(0.2));

  const PayoffPair none = invest_payoffs(0.7, 0.0, 0.0, 0.4);
  CHECK(none == baseline_equilibrium(0.7, 0.4));

  CHECK_THROWS_AS(invest_payoffs(0.5, 0.6, 0.1, 0.5), DomainError);
  CHECK_THROWS_AS(invest_payoffs(0.5, 0.4, -0.1, 0.5), DomainError);
}

TEST_CASE("expropriation payoffs") {
  const PayoffPair all = expropriate_payoffs(1.0, 1.0, 0.5);
  CHECK(all.u_seller == 0.0);
  CHECK(all.u_buyer == 1.0);

  const PayoffPair nothing = expropriate_payoffs(0.6, 0.0, 0.3);
  CHECK(nothing.u_seller == Approx(0.18));
  CHECK(nothing.u_buyer == 0.0);

  const PayoffPair partial = expropriate_payoffs(0.8, 0.5, 0.5);
  CHECK(partial.u_seller == Approx(0.15));
  CHECK(partial.u_buyer == 0.5);

  CHECK_THROWS_AS(expropriate_payoffs(0.5, 0.6, 0.5), DomainError);
}

TEST_CASE("baseline equilibrium") {
  CHECK(baseline_equilibrium(0.0, 0.3) == PayoffPair{0.0, 0.0});
  CHECK(baseline_equilibrium(0.9, 1.0) == PayoffPair{0.9, 0.0});
  const PayoffPair b = baseline_equilibrium(0.5, 0.2);
  CHECK(b.u_seller == Approx(0.1));
  CHECK(b.u_buyer == 0.0);
  CHECK_THROWS_AS(baseline_equilibrium(1.0, 0.5), DomainError);
  CHECK_THROWS_AS(baseline_equilibrium(-0.1, 0.5), DomainError);
}

TEST_CASE("nash bargain") {
  const BargainSplit sym = nash_bargain(1.0, 1e-12);
  CHECK(sym.u_seller == Approx(0.5));
  CHECK(sym.u_buyer == Approx(0.5));
  CHECK(sym.price == Approx(0.5));

  const BargainSplit exhausted = nash_bargain(0.37, 1.0);
  CHECK(exhausted.u_seller == 0.37);
  CHECK(exhausted.u_buyer == 0.0);
  CHECK(exhausted.price == 0.37);

  const BargainSplit s = nash_bargain(0.5, 0.2);
  CHECK(s.u_seller == Approx(0.3));
  CHECK(s.u_buyer == Approx(0.2));
  CHECK(s.price == Approx(0.3));

  CHECK_THROWS_AS(nash_bargain(-0.1, 0.5), DomainError);
}

TEST_CASE("optimal disclosure") {
  CHECK(optimal_disclosure(0.4, 1.0) == 0.4);
  CHECK(optimal_disclosure(0.9, 0.3) == 0.3);
  CHECK(optimal_disclosure(0.25, 0.25) == 0.25);
}

TEST_CASE("bargaining properties over sampled markets") {
  std::mt19937_64 gen(20240611);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 20000; ++i) {
    const double alpha0 = 1.0 - unit(gen);  // (0, 1]
    const double omega_hat = unit(gen);
    const double theta = equilibrium_share(alpha0);
    REQUIRE(theta == (1.0 + alpha0) / 2.0);
    REQUIRE(theta >= std::max(alpha0, 0.5));
    REQUIRE(theta <= 1.0);

    const BargainSplit s = nash_bargain(omega_hat, alpha0);
    // Conservation and participation.
    REQUIRE(std::abs(s.u_seller + s.u_buyer - omega_hat) <= 1e-16);
    REQUIRE(s.u_seller >= alpha0 * omega_hat);
    REQUIRE(s.u_buyer >= 0.0);

    // Strict monotonicity in disclosure.
    const double more = omega_hat + 1e-3;
    REQUIRE(nash_bargain(more, alpha0).u_seller > s.u_seller);

    // Expropriation is investment at a zero price, from the buyer's side.
    const double omega = omega_hat + unit(gen) * (1.0 - omega_hat) * 0.999;
    REQUIRE(expropriate_payoffs(omega, omega_hat, alpha0).u_buyer ==
            invest_payoffs(omega, omega_hat, 0.0, alpha0).u_buyer);

    // Full disclosure at the bargaining price beats hold-up componentwise.
    if (alpha0 < 1.0 && omega > 0.0) {
      const PayoffPair tee = invest_payoffs(omega, omega, nash_bargain(omega, alpha0).price, alpha0);
      const PayoffPair base = baseline_equilibrium(omega, alpha0);
      REQUIRE(tee.u_seller > base.u_seller);
      REQUIRE(tee.u_buyer > base.u_buyer);
    }
  }
}
