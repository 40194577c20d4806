#pragma once

#include <cstdint>

namespace holdup {

/// (k, n)-threshold provisioning and the deterrence inputs for a size-k
/// provider conspiracy. Currency fields are in whatever unit the caller uses.
struct SecurityParams {
  std::int64_t k = 1;       // collusion threshold
  std::int64_t n = 1;       // number of providers; validated only, does not enter phi
  double p = 0.5;           // per-breach detection probability
  double gamma = 1.0;       // collusion detection amplification
  double penalty = 0.0;     // C, penalty when caught
  double fixed_cost = 0.0;  // c, reported as net surplus omega - c
};

struct ScopeResult {
  double p_k = 0.0;
  double phi = 0.0;
  bool secure = false;
};

struct PenaltyEstimate {
  double annual_revenue = 0.0;
  double margin = 0.0;
  double discount_rate = 0.0;
  std::int64_t providers = 1;
  double npv = 0.0;
  double per_provider_penalty = 0.0;
};

void validate(const SecurityParams& params);

/// p_k = 1 - (1 - p)^(k^gamma).
double detection_probability(std::int64_t k, double p, double gamma);

/// Largest value a size-k conspiracy is deterred from stealing:
/// phi = k * p_k / (1 - p_k) * C.
double scope_threshold(const SecurityParams& params);

/// omega <= phi; the boundary value itself is secure.
bool ic_secure(double omega, const SecurityParams& params);

ScopeResult evaluate_scope(double omega, const SecurityParams& params);

/// Perpetuity valuation of a provider's confidential-compute line, split
/// evenly across providers.
PenaltyEstimate estimate_penalty(double annual_revenue, double margin, double discount_rate,
                                 std::int64_t providers);

}  // namespace holdup
