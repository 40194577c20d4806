#include <cmath>
#include <random>

#include "doctest.h"
#include "holdup/error.hpp"
#include "holdup/security_scope.hpp"

using namespace holdup;
using doctest::Approx;

namespace {

SecurityParams params(std::int64_t k, double p, double gamma, double C) {
  return SecurityParams{k, std::max<std::int64_t>(k, 5), p, gamma, C, 0.0};
}

}  // namespace

TEST_CASE("detection probability") {
  CHECK(detection_probability(1, 0.3, 2.0) == Approx(0.3).epsilon(1e-14));
  CHECK(detection_probability(3, 0.005, 2.0) == Approx(0.0441).epsilon(0.0001 / 0.0441));
  CHECK(detection_probability(3, 0.005, 1.0) == Approx(1.0 - std::pow(0.995, 3)).epsilon(1e-12));
  CHECK(detection_probability(3, 0.005, 1.0) == Approx(0.014925).epsilon(1e-6));

  CHECK_THROWS_AS(detection_probability(0, 0.3, 1.0), DomainError);
  CHECK_THROWS_AS(detection_probability(1, 0.0, 1.0), DomainError);
  CHECK_THROWS_AS(detection_probability(1, 1.0, 1.0), DomainError);
  CHECK_THROWS_AS(detection_probability(1, 0.3, 0.9), DomainError);
}

TEST_CASE("scope threshold") {
  CHECK(scope_threshold(params(3, 0.005, 2.0, 1.0)) == Approx(0.1384).epsilon(1e-3));
  CHECK(std::abs(scope_threshold(params(3, 0.005, 2.0, 7.5e9)) - 1.03e9) < 0.01e9);
  CHECK(scope_threshold(params(4, 0.2, 1.5, 0.0)) == 0.0);
  CHECK(scope_threshold(params(1, 0.5, 1.0, 1.0)) == Approx(1.0));

  SecurityParams bad = params(3, 0.005, 2.0, 1.0);
  bad.n = 2;
  CHECK_THROWS_AS(scope_threshold(bad), DomainError);
  bad = params(3, 0.005, 2.0, -1.0);
  CHECK_THROWS_AS(scope_threshold(bad), DomainError);
}

TEST_CASE("incentive check") {
  const SecurityParams sp = params(3, 0.005, 2.0, 7.5e9);
  const double phi = scope_threshold(sp);
  CHECK(ic_secure(phi, sp));
  CHECK(ic_secure(1.0e9, sp));
  CHECK_FALSE(ic_secure(2.0e9, sp));
  CHECK_FALSE(ic_secure(std::nextafter(phi, 2 * phi), sp));
  CHECK_THROWS_AS(ic_secure(-1.0, sp), DomainError);

  const ScopeResult r = evaluate_scope(1.0e9, sp);
  CHECK(r.phi == phi);
  CHECK(r.secure);
}

TEST_CASE("incentive check agrees with the inequality form") {
  std::mt19937_64 gen(7);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> ks(1, 10);
  for (int i = 0; i < 5000; ++i) {
    const SecurityParams sp = params(ks(gen), 0.001 + 0.9 * unit(gen), 1.0 + 2.0 * unit(gen),
                                     100.0 * unit(gen));
    const double phi = scope_threshold(sp);
    if (!std::isfinite(phi)) continue;
    const double omega = 2.0 * phi * unit(gen);
    // Stay clear of the rounding band at the boundary itself.
    if (std::abs(omega - phi) <= 1e-9 * phi) continue;
    const double escape = std::pow(1.0 - sp.p, std::pow(static_cast<double>(sp.k), sp.gamma));
    const double pk = 1.0 - escape;
    const bool inequality = escape * omega / static_cast<double>(sp.k) <= pk * sp.penalty;
    REQUIRE(ic_secure(omega, sp) == inequality);
  }
}

TEST_CASE("monotonicity over parameter grids") {
  for (double gamma : {1.0, 1.5, 2.0, 3.0}) {
    for (double p : {0.001, 0.005, 0.05, 0.3}) {
      double prev_pk = 0.0;
      double prev_phi = 0.0;
      for (std::int64_t k = 1; k <= 10; ++k) {
        const double pk = detection_probability(k, p, gamma);
        const double phi = scope_threshold(params(k, p, gamma, 1.0));
        CHECK(phi >= prev_phi);
        prev_phi = phi;
        // Strict comparisons only where p_k is not saturated at 1 in double.
        if (1.0 - detection_probability(k + 1, p * 1.1, gamma + 0.25) < 1e-10) continue;
        CHECK(pk > prev_pk);
        CHECK(detection_probability(k, p * 1.1, gamma) > pk);
        CHECK(detection_probability(k + 1, p, gamma + 0.25) > pk);
        CHECK(scope_threshold(params(k, p * 1.1, gamma, 1.0)) > phi);
        CHECK(scope_threshold(params(k, p, gamma, 2.0)) > phi);
        prev_pk = pk;
      }
    }
  }
}

TEST_CASE("penalty estimate") {
  const PenaltyEstimate e = estimate_penalty(15e9, 0.25, 0.10, 5);
  CHECK(e.npv == 37.5e9);
  CHECK(e.per_provider_penalty == 7.5e9);

  CHECK(estimate_penalty(3e9, 0.0, 0.07, 3).npv == 0.0);

  const PenaltyEstimate f = estimate_penalty(10e9, 0.20, 0.05, 4);
  CHECK(f.npv == Approx(40e9));
  CHECK(f.per_provider_penalty == Approx(10e9));

  CHECK_THROWS_AS(estimate_penalty(1e9, 0.2, 0.0, 4), DomainError);
  CHECK_THROWS_AS(estimate_penalty(1e9, 0.2, -0.1, 4), DomainError);
  CHECK_THROWS_AS(estimate_penalty(1e9, 0.2, 0.1, 0), DomainError);
}

TEST_CASE("penalty estimate feeds the scope threshold") {
  const PenaltyEstimate e = estimate_penalty(15e9, 0.25, 0.10, 5);
  const double phi = scope_threshold(SecurityParams{3, 5, 0.005, 2.0, e.per_provider_penalty, 0.0});
  CHECK(std::abs(phi - 1.03e9) / 1.03e9 < 0.01);
}
