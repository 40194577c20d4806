#include <random>

#include "doctest.h"
#include "holdup/agents.hpp"
#include "holdup/error.hpp"

using namespace holdup;
using doctest::Approx;

TEST_CASE("seller disclosure") {
  CHECK(seller_disclose(0.7, 1.0, {0.7, 0.6}, 0.0) == 0.7);
  CHECK(seller_disclose(0.7, 0.5, {0.7, 0.6}, 0.1) == Approx(0.4));
  CHECK(seller_disclose(0.3, 1.0, {0.3, 0.6}, 0.5) == 0.0);
  CHECK(seller_disclose(0.7, 1.0, {0.4, 0.6}, 0.0) == 0.4);

  CHECK_THROWS_AS(seller_disclose(0.7, 1.0, {0.7, 0.6}, -0.01), DomainError);
  CHECK_THROWS_AS(seller_disclose(0.7, 1.0, {0.8, 0.6}, 0.0), DomainError);
}

TEST_CASE("buyer offer") {
  const BuyerAgentConfig capped{0.6, 0.6, 0.0, true};
  CHECK(buyer_offer(0.5, capped, 0.0) == Approx(0.3));
  CHECK(buyer_offer(0.9, capped, 0.5) == 0.6);
  CHECK(buyer_offer(0.0, capped, -0.4) == 0.0);

  const BuyerAgentConfig open{0.6, 0.6, 0.0, false};
  CHECK(buyer_offer(0.9, open, 0.5) == Approx(1.04));

  const BuyerAgentConfig buffered{0.6, 0.6, 0.05, true};
  CHECK(buyer_offer(0.5, buffered, -0.02) == Approx(0.33));
}

TEST_CASE("seller acceptance") {
  CHECK(seller_accept(0.3, 0.5, 0.6));
  CHECK_FALSE(seller_accept(0.29, 0.5, 0.6));
  const BuyerAgentConfig capped{0.6, 0.6, 0.0, true};
  CHECK_FALSE(seller_accept(buyer_offer(0.5, capped, -0.01), 0.5, 0.6));
}

TEST_CASE("budget defaults and separation") {
  CHECK(default_budget_cap(0.6, 5.0) == 0.6);
  CHECK(default_budget_cap(0.6, 0.5) == Approx(0.3));
  const BuyerAgentConfig b = make_buyer_config(0.6, 2.0, ErrorModel{0.3, 0.0, 0.02}, true);
  CHECK(b.budget_cap == 0.6);
  CHECK(b.buffer_d == 0.02);

  CHECK(minimally_separated(ErrorModel{1.0, 0.0, 0.0}, 0.6));
  CHECK_FALSE(minimally_separated(ErrorModel{1.2, 0.0, 0.0}, 0.6));
  CHECK_THROWS_AS(validate(ErrorModel{-0.1, 0.0, 0.0}), DomainError);
  CHECK_THROWS_AS(validate(ErrorModel{0.0, -0.1, 0.0}), DomainError);
  CHECK_THROWS_AS(validate(ErrorModel{0.0, 0.0, -0.1}), DomainError);
}

TEST_CASE("agent properties over sampled draws") {
  std::mt19937_64 gen(99);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 20000; ++i) {
    const double omega = unit(gen);
    const double phi = 1.5 * unit(gen);
    const double theta = 0.5 + 0.5 * unit(gen);
    const double eps = unit(gen);
    const double disclosed = seller_disclose(omega, phi, {omega, theta}, eps);
    REQUIRE(disclosed >= 0.0);
    REQUIRE(disclosed <= std::min(omega, phi));

    const double eb_range = 2.0 * unit(gen);
    const double e_b = eb_range * (2.0 * unit(gen) - 1.0);
    const double w = unit(gen);

    // d = 0: trade iff e_b >= 0 (the theta budget always covers theta * w).
    const BuyerAgentConfig plain{theta, theta, 0.0, true};
    REQUIRE(seller_accept(buyer_offer(w, plain, e_b), w, theta) == (e_b >= 0.0));

    // Budget below theta * w additionally blocks trade.
    const double tight = theta * w * unit(gen);
    const BuyerAgentConfig low{theta, tight, 0.0, true};
    if (tight < theta * w) REQUIRE_FALSE(seller_accept(buyer_offer(w, low, e_b), w, theta));

    // Buffer d > 0 without cap truncation: trade iff e_b >= -d.
    const double d = 0.2 * unit(gen);
    const BuyerAgentConfig buffered{theta, 10.0, d, true};
    if (std::abs(e_b + d) > 1e-12) {
      REQUIRE(seller_accept(buyer_offer(w, buffered, e_b), w, theta) == (e_b >= -d));
    }

    // Offers never exceed the cap, so the buyer loses at most budget - w per trade.
    const double offer = buyer_offer(w, plain, e_b);
    REQUIRE(offer <= plain.budget_cap);
    REQUIRE(w - offer >= w - plain.budget_cap);
  }
}

TEST_CASE("deliberate underdisclosure never pays") {
  for (double alpha0 : {0.1, 0.4, 0.8}) {
    const double theta = (1.0 + alpha0) / 2.0;
    for (double omega : {0.2, 0.5, 0.95}) {
      double prev = -1.0;
      for (int i = 0; i <= 100; ++i) {
        const double disclosed = omega * i / 100.0;
        const double payoff = theta * disclosed + alpha0 * (omega - disclosed);
        CHECK(payoff > prev);
        prev = payoff;
      }
    }
  }
}
