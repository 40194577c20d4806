#include "holdup/app/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

#include "holdup/app/commands.hpp"
#include "holdup/app/format.hpp"
#include "holdup/app/sweep.hpp"
#include "holdup/montecarlo.hpp"
#include "holdup/quadrature.hpp"
#include "holdup/security_scope.hpp"
#include "holdup/tee_protocol.hpp"

namespace holdup::app {

namespace {

// Buyer payoff curve at theta = 0.6, d = 0: E_b from 0 to 0.8 in steps of 0.02.
constexpr double kCurveTheta = 0.6;
const SweepSpec kCurveGrid{SweepParameter::EB, 0.0, 0.8, 41, true};

McOptions mc_options(const AcceptanceOptions& o, std::uint64_t samples) {
  return {o.samples.value_or(samples), o.seed, o.workers};
}

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

CriterionResult closed_form_payoff(const AcceptanceOptions& o) {
  const auto start = std::chrono::steady_clock::now();
  const McOptions mc = mc_options(o, 1'000'000);
  double worst_z = 0.0;
  double worst_quad = 0.0;
  bool ok = true;
  for (int i = 1; i <= 9; ++i) {
    const double theta = i / 10.0;
    const double closed = expected_buyer_payoff_closed(theta);
    const McEstimate est = estimate_buyer_payoff(
        PayoffScenario{market_from_share(theta), ErrorModel{2.0 * theta, 0.0, 0.0}, true}, mc);
    const double quad = quadrature_buyer_payoff(theta, 2.0 * theta, 0.0, true);
    const double gap = std::abs(est.mean - closed);
    worst_z = std::max(worst_z, est.std_error > 0.0 ? gap / est.std_error : INFINITY);
    worst_quad = std::max(worst_quad, std::abs(quad - closed));
    ok = ok && gap <= 3.0 * est.std_error && std::abs(quad - closed) <= 1e-6;
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  ok = ok && seconds < 30.0;
  return {1, "", ok,
          "max |MC - closed| = " + fmt(worst_z) + " sigma (<= 3), max |quadrature - closed| = " +
              fmt(worst_quad) + " (<= 1e-6), " + fmt(seconds) + " s (< 30)"};
}

CriterionResult threshold_recovery(const AcceptanceOptions&) {
  const ErrorThreshold t = max_error_threshold();
  const double d_theta = std::abs(t.theta_star - 6.0 / 11.0);
  const double d_eb = std::abs(t.e_b_star - 12.0 / 11.0);
  return {2, "", d_theta <= 1e-9 && d_eb <= 1e-9,
          "theta* = " + format_number(t.theta_star) + " (err " + fmt(d_theta) + "), E_b* = " +
              format_number(t.e_b_star) + " (err " + fmt(d_eb) + "), tolerance 1e-9"};
}

CriterionResult decomposition_identity(const AcceptanceOptions& o) {
  std::mt19937_64 gen(o.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    double theta = unit(gen);
    while (theta == 0.0) theta = unit(gen);
    worst = std::max(worst, std::abs(decompose_buyer_payoff(theta).total() -
                                     expected_buyer_payoff_closed(theta)));
  }
  return {3, "", worst <= 1e-15, "max residual " + fmt(worst) + " over 1000 draws (<= 1e-15)"};
}

struct SignChanges {
  int count = 0;
  double lo = 0.0;
  double hi = 0.0;
};

SignChanges sign_changes(const std::vector<PayoffRow>& rows, bool cap) {
  SignChanges s;
  const PayoffRow* prev = nullptr;
  for (const PayoffRow& r : rows) {
    if (r.cap_enabled != cap) continue;
    if (prev && (prev->mc.mean > 0.0) != (r.mc.mean > 0.0)) {
      if (s.count++ == 0) {
        s.lo = prev->value;
        s.hi = r.value;
      }
    }
    prev = &r;
  }
  return s;
}

CriterionResult curve_crossings(const AcceptanceOptions& o) {
  const double uncapped = find_zero_crossing(kCurveTheta, 0.0, false, {0.2, 0.6});
  const double capped = find_zero_crossing(kCurveTheta, 0.0, true, {0.5, 0.7});
  bool ok = std::abs(uncapped - 0.4) <= 1e-3 && std::abs(capped - 0.6) <= 1e-3;

  PayoffBase base{market_from_share(kCurveTheta), ErrorModel{}, true, false};
  const auto rows = payoff_sweep(kCurveGrid, base, mc_options(o, 1'000'000));
  const double step = (kCurveGrid.to - kCurveGrid.from) / (kCurveGrid.steps - 1);
  auto brackets = [&](const SignChanges& s, double target) {
    return s.count == 1 && s.lo - step <= target && target <= s.hi + step;
  };
  const SignChanges off = sign_changes(rows, false);
  const SignChanges on = sign_changes(rows, true);
  ok = ok && brackets(off, 0.4) && brackets(on, 0.6);
  auto describe = [](const SignChanges& s) {
    return std::to_string(s.count) + " change(s), first [" + format_number(s.lo) + ", " +
           format_number(s.hi) + "]";
  };
  return {4, "", ok,
          "quadrature roots " + fmt(uncapped) + " (no cap), " + fmt(capped) +
              " (cap); MC no cap " + describe(off) + ", cap " + describe(on)};
}

CriterionResult buffer_derivative(const AcceptanceOptions& o) {
  const McOptions mc = mc_options(o, 10'000'000);
  bool ok = true;
  std::ostringstream detail;
  for (double theta : {0.25, 0.4, 0.6, 0.75}) {
    const McEstimate est = estimate_buffer_derivative(theta, 0.01, mc);
    const double closed = buffer_derivative_closed(theta);
    const double band = 3.0 * est.std_error + 0.02;
    bool here = std::abs(est.mean - closed) <= band;
    if (theta == 0.25) here = here && est.mean > 0.0;
    if (theta == 0.75) here = here && est.mean < 0.0;
    ok = ok && here;
    detail << "theta " << theta << ": " << fmt(est.mean) << " vs " << fmt(closed) << " (band "
           << fmt(band) << ")" << (theta == 0.75 ? "" : "; ");
  }
  return {5, "", ok, detail.str()};
}

CriterionResult security_numbers(const AcceptanceOptions&) {
  const double p_k = detection_probability(3, 0.005, 2.0);
  const double phi_unit = scope_threshold({3, 3, 0.005, 2.0, 1.0, 0.0});
  const double phi_big = scope_threshold({3, 3, 0.005, 2.0, 7.5e9, 0.0});
  const PenaltyEstimate pen = estimate_penalty(15e9, 0.25, 0.10, 5);
  const bool ok = std::abs(p_k - 0.0441) <= 1e-4 && std::abs(phi_unit - 0.138) <= 1e-3 &&
                  std::abs(phi_big - 1.03e9) <= 0.01e9 && pen.npv == 37.5e9 &&
                  pen.per_provider_penalty == 7.5e9;
  return {6, "", ok,
          "p_k " + fmt(p_k) + ", phi(C=1) " + fmt(phi_unit) + ", phi(C=7.5e9) " + fmt(phi_big) +
              ", NPV " + format_number(pen.npv) + ", per provider " +
              format_number(pen.per_provider_penalty)};
}

CriterionResult full_security_trades(const AcceptanceOptions& o) {
  std::mt19937_64 gen(o.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto positive = [&](double scale) {
    double x = 0.0;
    while (x == 0.0) x = scale * unit(gen);
    return x;
  };
  int violations = 0;
  int secure = 0;
  for (int i = 0; i < 10'000; ++i) {
    const double alpha0 = positive(0.99);
    const double phi = positive(1.0);
    const double omega = positive(1.0);
    const MarketParams market = market_from_alpha0(alpha0);
    const SessionConfig config = make_session_config(market, phi, ErrorModel{}, true);
    const SessionOutcome out = run_session(config, omega, {}).outcome;
    const double u_s = out.payoffs.u_seller;
    bool ok = out.traded && out.final_state == SessionState::Accepted && u_s > alpha0 * omega;
    if (omega <= phi) {
      ++secure;
      ok = ok && out.omega_disclosed == omega && out.payment == market.theta * omega &&
           out.payoffs.u_buyer > 0.0;
    } else {
      ok = ok && out.omega_disclosed == phi;
    }
    violations += !ok;
  }
  return {7, "", violations == 0,
          std::to_string(violations) + " violations in 10000 sessions (" + std::to_string(secure) +
              " with omega <= phi)"};
}

CriterionResult confinement(const AcceptanceOptions&) {
  // Four ways to exit, 250 seller types each; within a family the buyer's
  // view must not depend on omega.
  const MarketParams market = market_from_alpha0(0.5);
  const SessionConfig base = make_session_config(market, 1.0, ErrorModel{0.2, 1.0, 0.0}, true);
  struct Family {
    const char* name;
    SessionConfig config;
    SessionDraws draws;
  };
  SessionConfig timeout = base;
  timeout.timeout_at = SessionState::Bargained;
  SessionConfig refused = base;
  refused.outlook.buyer_tee = -1.0;
  const Family families[] = {{"offer-rejected", base, {0.0, -0.1}},
                             {"nothing-disclosed", base, {1.0, 0.0}},
                             {"timeout", timeout, {0.0, 0.0}},
                             {"delegation-refused", refused, {0.0, 0.0}}};
  int sessions = 0;
  int violations = 0;
  for (const Family& fam : families) {
    std::vector<TranscriptEvent> first;
    for (int i = 0; i < 250; ++i) {
      const double omega = (i + 0.5) / 250.0;
      const SessionRun run = run_session(fam.config, omega, fam.draws);
      const auto view = run.transcript.view(Visibility::BuyerVisible);
      ++sessions;
      const bool exited = run.outcome.final_state == SessionState::Exited;
      if (i == 0) first = view;
      violations += !(exited && run.transcript.secret_erased && view == first);
    }
  }
  return {8, "", violations == 0,
          std::to_string(violations) + " violations in " + std::to_string(sessions) +
              " exited sessions"};
}

CriterionResult seller_rationality(const AcceptanceOptions& o) {
  const McOptions mc = mc_options(o, 1'000'000);
  bool ok = true;
  double worst_margin = INFINITY;
  std::uint64_t pointwise = 0;
  for (double e_b : {0.2, 0.6, 1.0}) {
    for (double alpha0 : {0.2, 0.5, 0.8}) {
      const PayoffScenario scenario{market_from_alpha0(alpha0), ErrorModel{e_b, 0.0, 0.0}, true};
      const McEstimate est = estimate_seller_payoff(scenario, mc);
      const double margin = est.mean - (alpha0 / 2.0 - 3.0 * est.std_error);
      worst_margin = std::min(worst_margin, margin);
      ok = ok && margin >= 0.0;

      const SessionConfig config = committed_session(scenario);
      for (std::uint64_t i = 0; i < mc.samples; ++i) {
        SampleStream stream(mc.seed, i);
        const SampledSession s = draw_session(stream, config.errors);
        const SessionOutcome out = simulate_session(config, s.omega, s.draws);
        pointwise += out.traded && out.payoffs.u_seller < alpha0 * s.omega;
      }
    }
  }
  ok = ok && pointwise == 0;
  return {9, "", ok,
          "min (Pi_S - alpha0/2 + 3 sigma) = " + fmt(worst_margin) + ", " +
              std::to_string(pointwise) + " traded samples below alpha0 * omega"};
}

CriterionResult reproducibility(const AcceptanceOptions& o) {
  const std::uint64_t samples = o.samples.value_or(1'000'000);
  const std::vector<std::string> args{"mc",        "--theta", "0.6",
                                      "--eb",      "1.2",     "--samples",
                                      std::to_string(samples), "--seed", std::to_string(o.seed)};
  std::string reference;
  bool ok = true;
  for (unsigned workers : {1u, 2u, 8u}) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(args, out, err, CliEnv{workers});
    ok = ok && code == kExitOk;
    if (workers == 1) {
      reference = out.str();
    } else {
      ok = ok && out.str() == reference;
    }
  }
  return {10, "", ok && !reference.empty(),
          ok ? "mc output identical for 1, 2 and 8 workers (" + std::to_string(reference.size()) +
                   " bytes)"
             : "mc output differs across worker counts"};
}

CriterionResult cap_dominance(const AcceptanceOptions&) {
  int violations = 0;
  double tightest = INFINITY;
  for (double e_b : sweep_grid(kCurveGrid)) {
    const double on = quadrature_buyer_payoff(kCurveTheta, e_b, 0.0, true);
    const double off = quadrature_buyer_payoff(kCurveTheta, e_b, 0.0, false);
    violations += !(on >= off);
    tightest = std::min(tightest, on - off);
  }
  return {11, "", violations == 0,
          std::to_string(violations) + " grid points with cap-on < cap-off; min gap " +
              fmt(tightest)};
}

}  // namespace

const std::vector<Criterion>& acceptance_criteria() {
  static const std::vector<Criterion> criteria{
      {1, "closed-form buyer payoff", closed_form_payoff},
      {2, "error threshold recovery", threshold_recovery},
      {3, "payoff decomposition identity", decomposition_identity},
      {4, "payoff curve zero crossings", curve_crossings},
      {5, "overpayment buffer derivative", buffer_derivative},
      {6, "security scope numbers", security_numbers},
      {7, "secure values always trade", full_security_trades},
      {8, "exit confinement", confinement},
      {9, "seller rationality under noise", seller_rationality},
      {10, "worker-count reproducibility", reproducibility},
      {11, "budget cap dominance", cap_dominance},
  };
  return criteria;
}

CriterionResult run_criterion(const Criterion& criterion, const AcceptanceOptions& options) {
  CriterionResult r;
  try {
    r = criterion.run(options);
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = std::string("threw: ") + e.what();
  }
  r.id = criterion.id;
  r.name = criterion.name;
  return r;
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options) {
  std::vector<CriterionResult> results;
  for (const Criterion& c : acceptance_criteria()) results.push_back(run_criterion(c, options));
  return results;
}

}  // namespace holdup::app
