#include <cmath>

#include "doctest.h"
#include "holdup/error.hpp"
#include "holdup/montecarlo.hpp"
#include "holdup/quadrature.hpp"

using namespace holdup;
using doctest::Approx;

namespace {

bool within(const McEstimate& e, double target, double sigmas = 3.0) {
  return std::abs(e.mean - target) <= sigmas * e.std_error;
}

}  // namespace

TEST_CASE("sample streams are keyed by seed and index") {
  SampleStream a(1, 10), b(1, 10), c(1, 11), d(2, 10);
  const double ua = a.uniform();
  CHECK(ua == b.uniform());
  CHECK(ua != c.uniform());
  CHECK(ua != d.uniform());
  CHECK(a.uniform() != ua);

  // Crude uniformity check.
  double sum = 0.0;
  double sq = 0.0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    SampleStream s(42, static_cast<std::uint64_t>(i));
    const double u = s.uniform();
    REQUIRE(u >= 0.0);
    REQUIRE(u < 1.0);
    sum += u;
    sq += u * u;
  }
  CHECK(sum / n == Approx(0.5).epsilon(0.01));
  CHECK(sq / n == Approx(1.0 / 3.0).epsilon(0.01));
}

TEST_CASE("estimate_mean is independent of the worker count") {
  auto f = [](SampleStream& s) { return std::sin(10.0 * s.uniform()) + s.uniform(); };
  const McEstimate one = estimate_mean({300001, 9, 1}, f);
  for (unsigned w : {2u, 3u, 8u}) {
    const McEstimate many = estimate_mean({300001, 9, w}, f);
    CHECK(many.mean == one.mean);
    CHECK(many.std_error == one.std_error);
  }
  CHECK(one.samples == 300001);
  CHECK(one.seed == 9);
  CHECK(estimate_mean({1, 9, 1}, f).std_error == 0.0);
  CHECK_THROWS_AS(estimate_mean({0, 9, 1}, f), DomainError);
}

TEST_CASE("closed forms") {
  CHECK(expected_buyer_payoff_closed(1e-12) == Approx(0.25));
  CHECK(std::abs(expected_buyer_payoff_closed(6.0 / 11.0)) < 1e-16);
  CHECK(expected_buyer_payoff_closed(0.6) == Approx(-0.025));
  CHECK_THROWS_AS(expected_buyer_payoff_closed(0.0), DomainError);
  CHECK_THROWS_AS(expected_buyer_payoff_closed(1.0), DomainError);

  const PayoffDecomposition half = decompose_buyer_payoff(0.5);
  CHECK(half.baseline_term == 0.25);
  CHECK(half.underpayment_loss == 0.5);
  CHECK(half.budget_offset == Approx(6.5 / 24.0));
  CHECK(half.total() == Approx(0.5 / 24.0));
  const PayoffDecomposition top = decompose_buyer_payoff(1.0 - 1e-12);
  CHECK(top.baseline_term == Approx(0.0));
  CHECK(top.budget_offset == Approx(7.0 / 24.0));

  CHECK(buffer_derivative_closed(0.5) == 0.0);
  CHECK(buffer_derivative_closed(0.25) == 0.25);
  CHECK(buffer_derivative_closed(0.75) == Approx(-1.0 / 12.0));
  CHECK(buffer_derivative_closed(0.4) == Approx(0.0625));
  CHECK_THROWS_AS(buffer_derivative_closed(0.0), DomainError);
}

TEST_CASE("maximum error threshold") {
  const ErrorThreshold t = max_error_threshold();
  CHECK(std::abs(t.theta_star - 6.0 / 11.0) < 1e-9);
  CHECK(std::abs(t.e_b_star - 12.0 / 11.0) < 1e-9);
  CHECK(std::abs(expected_buyer_payoff_closed(t.theta_star)) < 1e-12);
}

TEST_CASE("buyer payoff estimates") {
  const McOptions opt{400000, 17, 0};

  SUBCASE("closed-form regime") {
    const McEstimate e =
        estimate_buyer_payoff({market_from_share(0.5), ErrorModel{1.0, 0.0, 0.0}, true}, opt);
    CHECK(within(e, 0.5 / 24.0));
  }
  SUBCASE("capped crossing at E_b = 0.6") {
    const McEstimate e =
        estimate_buyer_payoff({market_from_share(0.6), ErrorModel{0.6, 0.0, 0.0}, true}, opt);
    CHECK(within(e, 0.0));
  }
  SUBCASE("no noise") {
    for (double theta : {0.3, 0.5, 0.8}) {
      const McEstimate e =
          estimate_buyer_payoff({market_from_share(theta), ErrorModel{}, true}, opt);
      CHECK(within(e, (1.0 - theta) / 2.0));
    }
  }
  SUBCASE("agrees with quadrature off the closed-form line") {
    for (double eb : {0.2, 0.5, 0.9}) {
      for (double d : {0.0, 0.03}) {
        for (bool cap : {true, false}) {
          const McEstimate e = estimate_buyer_payoff(
              {market_from_share(0.6), ErrorModel{eb, 0.0, d}, cap}, opt);
          CHECK(within(e, quadrature_buyer_payoff(0.6, eb, d, cap), 4.0));
        }
      }
    }
  }
  SUBCASE("signature taking market and errors") {
    const McEstimate a =
        estimate_buyer_payoff(market_from_alpha0(0.2), ErrorModel{1.2, 0.0, 0.0}, true, 400000, 3);
    CHECK(within(a, -0.025));
  }
}

TEST_CASE("seller payoff estimates") {
  const McOptions opt{300000, 23, 0};
  const MarketParams m = market_from_alpha0(0.2);

  const McEstimate clean = estimate_seller_payoff({m, ErrorModel{}, true}, opt);
  CHECK(within(clean, 0.3));

  const McEstimate noisy = estimate_seller_payoff({m, ErrorModel{0.8, 0.0, 0.0}, true}, opt);
  CHECK(noisy.mean >= 0.1 - 3.0 * noisy.std_error);

  // Agent that reveals essentially nothing: every session exits to alpha0 * omega.
  const McEstimate blank = estimate_seller_payoff({m, ErrorModel{0.0, 1e9, 0.0}, true}, opt);
  CHECK(within(blank, 0.1));
}

TEST_CASE("buffer derivative estimate") {
  const McOptions opt{2000000, 31, 0};
  for (double theta : {0.25, 0.4, 0.75}) {
    const McEstimate e = estimate_buffer_derivative(theta, 0.01, opt);
    CHECK(std::abs(e.mean - buffer_derivative_closed(theta)) <= 3.0 * e.std_error + 0.02);
  }
  CHECK(estimate_buffer_derivative(0.7, 0.01, opt).mean < 0.0);
  CHECK_THROWS_AS(estimate_buffer_derivative(0.3, 0.0, opt), DomainError);
}

TEST_CASE("robustness frontier") {
  const McOptions opt{200000, 41, 0};
  const auto frontier = robustness_frontier(
      0.2, {{0.0, 0.0}, {0.0, 1.2}, {0.0, 0.4}, {0.3, 0.4}, {0.6, 0.8}}, opt);
  REQUIRE(frontier.size() == 5);
  CHECK(frontier[0].buyer_gain > 0.0);
  CHECK(frontier[0].seller_gain > 0.0);
  CHECK(frontier[0].both_prefer());
  CHECK(std::abs(frontier[1].buyer_gain + 0.025) <= 3.0 * frontier[1].buyer_std_error);
  CHECK_FALSE(frontier[1].both_prefer());
  for (const auto& p : frontier) {
    if (p.e_s == 0.0) CHECK(p.seller_gain >= -3.0 * p.seller_std_error);
  }
  CHECK_THROWS_AS(robustness_frontier(0.2, {}, opt), DomainError);
}

TEST_CASE("outlook from estimates drives delegation") {
  const PayoffScenario noisy{market_from_alpha0(0.2), ErrorModel{1.2, 0.0, 0.0}, true};
  const DelegationOutlook o = estimate_outlook(noisy, {200000, 5, 0});
  CHECK_FALSE(delegation_choice(o.buyer_tee, o.buyer_baseline));
  CHECK(delegation_choice(o.seller_tee, o.seller_baseline));
}
