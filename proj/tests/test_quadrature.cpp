#include <cmath>

#include "doctest.h"
#include "holdup/error.hpp"
#include "holdup/montecarlo.hpp"
#include "holdup/quadrature.hpp"
#include "payoff_oracle.hpp"

using namespace holdup;

TEST_CASE("adaptive integration basics") {
  CHECK(std::abs(integrate_adaptive([](double x) { return std::sin(x); }, 0.0, M_PI) - 2.0) < 1e-9);
  CHECK(std::abs(integrate_adaptive([](double x) { return std::exp(-x * x); }, -3.0, 3.0) -
                 std::sqrt(M_PI) * std::erf(3.0)) < 1e-9);
  CHECK(integrate_adaptive([](double) { return 1.0; }, 2.0, 2.0) == 0.0);

  QuadratureOptions stingy;
  stingy.abs_tolerance = 1e-14;
  stingy.max_depth = 4;
  CHECK_THROWS_AS(integrate_adaptive([](double x) { return std::sqrt(std::abs(x)); }, -1.0, 1.0,
                                     stingy),
                  ToleranceError);
}

TEST_CASE("pointwise regions") {
  // no trade, under budget, capped
  CHECK(buyer_payoff_pointwise(0.6, 0.5, -0.01, 0.0, true) == 0.0);
  CHECK(buyer_payoff_pointwise(0.6, 0.5, 0.1, 0.0, true) == doctest::Approx(0.5 - 0.4));
  CHECK(buyer_payoff_pointwise(0.6, 0.5, 0.5, 0.0, true) == doctest::Approx(0.5 - 0.6));
  CHECK(buyer_payoff_pointwise(0.6, 0.5, 0.5, 0.0, false) == doctest::Approx(0.5 - 0.8));
  CHECK(buyer_payoff_pointwise(0.6, 0.5, -0.01, 0.02, true) == doctest::Approx(0.5 - 0.31));
}

TEST_CASE("quadrature matches the closed form on the E_b = 2 theta line") {
  for (int i = 1; i <= 9; ++i) {
    const double theta = i / 10.0;
    CHECK(std::abs(quadrature_buyer_payoff(theta, 2.0 * theta, 0.0, true) -
                   expected_buyer_payoff_closed(theta)) < 1e-6);
  }
}

TEST_CASE("no-cap payoff is linear in E_b") {
  // With d = 0 and no cap, Pi_B = (1 - theta - E_b) / 4 for every E_b > 0.
  for (double theta : {0.3, 0.6, 0.8}) {
    for (double eb : {0.05, 0.4, 1.3}) {
      CHECK(std::abs(quadrature_buyer_payoff(theta, eb, 0.0, false) - (1.0 - theta - eb) / 4.0) <
            1e-8);
    }
  }
  CHECK(std::abs(quadrature_buyer_payoff(0.6, 0.4, 0.0, false)) < 1e-6);
}

TEST_CASE("capped payoff vanishes at theta = E_b = 0.6") {
  CHECK(std::abs(quadrature_buyer_payoff(0.6, 0.6, 0.0, true)) < 1e-6);
}

TEST_CASE("quadrature agrees with the independent oracle") {
  for (double theta : {0.25, 0.6, 0.9}) {
    for (double eb : {0.03, 0.3, 0.75, 2.0}) {
      for (double d : {0.0, 0.01, 0.2}) {
        for (bool cap : {true, false}) {
          CAPTURE(theta);
          CAPTURE(eb);
          CAPTURE(d);
          CAPTURE(cap);
          CHECK(std::abs(quadrature_buyer_payoff(theta, eb, d, cap) -
                         oracle::buyer_payoff(theta, eb, d, cap)) < 1e-8);
        }
      }
    }
  }
}

TEST_CASE("no-noise point mass") {
  // E_b = 0: always trade at theta * omega + d, capped at theta.
  CHECK(std::abs(quadrature_buyer_payoff(0.5, 0.0, 0.0, true) - 0.25) < 1e-12);
  CHECK(std::abs(quadrature_buyer_payoff(0.5, 0.0, 0.0, false) - 0.25) < 1e-12);
  CHECK(std::abs(quadrature_buyer_payoff(0.5, 0.0, 0.1, false) - 0.15) < 1e-12);
  // Capped: pay min(theta * omega + d, theta); integral of 0.5 omega - 0.1 on
  // [0, 0.8] plus omega - 0.5 on [0.8, 1], 0.08 each.
  CHECK(std::abs(quadrature_buyer_payoff(0.5, 0.0, 0.1, true) - 0.16) < 1e-12);
}

TEST_CASE("cap dominance") {
  for (double theta : {0.2, 0.6, 0.85}) {
    for (double eb = 0.0; eb <= 1.5; eb += 0.05) {
      for (double d : {0.0, 0.05}) {
        CHECK(quadrature_buyer_payoff(theta, eb, d, true) >=
              quadrature_buyer_payoff(theta, eb, d, false));
      }
    }
  }
}

TEST_CASE("zero crossings") {
  CHECK(std::abs(find_zero_crossing(0.6, 0.0, false, {0.1, 1.0}) - 0.4) < 1e-4);
  CHECK(std::abs(find_zero_crossing(0.6, 0.0, true, {0.1, 1.0}) - 0.6) < 1e-4);
  CHECK(find_zero_crossing(0.6, 0.0, true, {0.1, 1.0}) >=
        find_zero_crossing(0.6, 0.0, false, {0.1, 1.0}));
  CHECK(std::abs(find_share_crossing({0.1, 0.9}) - 6.0 / 11.0) < 1e-8);

  CHECK_THROWS_AS(find_zero_crossing(0.6, 0.0, false, {0.1, 0.3}), BracketError);
  CHECK_THROWS_AS(find_zero_crossing(0.6, 0.0, false, {0.5, 0.3}), DomainError);
}

TEST_CASE("domain checks") {
  CHECK_THROWS_AS(quadrature_buyer_payoff(0.0, 0.5, 0.0, true), DomainError);
  CHECK_THROWS_AS(quadrature_buyer_payoff(0.5, -0.5, 0.0, true), DomainError);
  CHECK_THROWS_AS(quadrature_buyer_payoff(0.5, 0.5, -0.1, true), DomainError);
}
