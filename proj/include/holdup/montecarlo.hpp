#pragma once

// Sampling engine and closed-form payoffs for the noisy-agent session.

#include <cstdint>
#include <functional>
#include <limits>
#include <vector>

#include "holdup/agents.hpp"
#include "holdup/core_model.hpp"
#include "holdup/rng.hpp"
#include "holdup/tee_protocol.hpp"

namespace holdup {

struct McEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};

struct McOptions {
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 1;
  unsigned workers = 0;  // 0: HOLDUP_WORKERS, else hardware concurrency
};

/// Worker count from HOLDUP_WORKERS, falling back to hardware concurrency.
unsigned default_workers();

/// Mean and standard error of f over `samples` independent streams.
/// Samples are reduced in fixed-size blocks combined in index order, so the
/// result is bitwise identical for every worker count.
McEstimate estimate_mean(const McOptions& options,
                         const std::function<double(SampleStream&)>& per_sample);

/// Session draws from one stream: omega ~ U[0,1), e_b ~ U[-E_b, E_b),
/// eps_s ~ U[0, E_s). Always consumes three lanes in that order so the same
/// sample index sees the same uniforms under every error model.
struct SampledSession {
  double omega;
  SessionDraws draws;
};
SampledSession draw_session(SampleStream& stream, const ErrorModel& errors);

/// Scenario the estimators evaluate: delegation is taken as given.
struct PayoffScenario {
  MarketParams market;
  ErrorModel errors;
  bool cap_enabled = true;
  double phi = std::numeric_limits<double>::infinity();
};

SessionConfig committed_session(const PayoffScenario& scenario);

McEstimate estimate_buyer_payoff(const PayoffScenario& scenario, const McOptions& options);
McEstimate estimate_buyer_payoff(const MarketParams& market, const ErrorModel& errors,
                                 bool cap_enabled, std::uint64_t samples, std::uint64_t seed);
McEstimate estimate_seller_payoff(const PayoffScenario& scenario, const McOptions& options);
McEstimate estimate_seller_payoff(const MarketParams& market, const ErrorModel& errors,
                                  bool cap_enabled, std::uint64_t samples, std::uint64_t seed);

/// Monte Carlo ex ante payoffs packaged for the delegation decision.
DelegationOutlook estimate_outlook(const PayoffScenario& scenario, const McOptions& options);

/// Buyer's ex ante payoff with e_b ~ U(-2 theta, 2 theta), budget theta, d = 0:
/// (6 - 11 theta) / 24.
double expected_buyer_payoff_closed(double theta);

struct PayoffDecomposition {
  double baseline_term = 0.0;       // (1 - theta) / 2, payoff with no errors
  double underpayment_loss = 0.0;   // 1 / 2, trades killed by negative draws
  double budget_offset = 0.0;       // (theta + 6) / 24, recovered by the cap

  double total() const { return baseline_term - underpayment_loss + budget_offset; }
};

PayoffDecomposition decompose_buyer_payoff(double theta);

/// d Pi_B / d d at d = 0 in the E_b = 2 theta regime: (1 - 2 theta) / (8 theta).
double buffer_derivative_closed(double theta);

/// One-sided difference [Pi_B(d = h) - Pi_B(d = 0)] / h with common random
/// numbers, E_b = 2 theta, cap theta.
McEstimate estimate_buffer_derivative(double theta, double h, const McOptions& options);

struct ErrorThreshold {
  double theta_star = 0.0;
  double e_b_star = 0.0;
};

/// Root of the closed-form buyer payoff in theta, and the matching E_b = 2 theta.
ErrorThreshold max_error_threshold();

struct FrontierPoint {
  double e_s = 0.0;
  double e_b = 0.0;
  double buyer_gain = 0.0;   // Pi_B - 0
  double seller_gain = 0.0;  // Pi_S - alpha0 / 2
  double buyer_std_error = 0.0;
  double seller_std_error = 0.0;

  bool both_prefer() const { return buyer_gain >= 0.0 && seller_gain >= 0.0; }
};

struct ErrorGridPoint {
  double e_s = 0.0;
  double e_b = 0.0;
};

std::vector<FrontierPoint> robustness_frontier(double alpha0, const std::vector<ErrorGridPoint>& grid,
                                               const McOptions& options);

}  // namespace holdup
