#pragma once

// Deterministic quadrature oracle for the buyer's ex ante payoff.
//
// Integrates the region-wise payoff (no trade / under budget / budget capped)
// directly over (omega, e_b); it shares no code with the session simulator,
// so Monte Carlo estimates can be checked against it.

#include <functional>

namespace holdup {

struct QuadratureOptions {
  double abs_tolerance = 1e-8;
  int max_depth = 40;  // refinement budget per panel
  int min_depth = 3;
};

/// Adaptive Simpson with Richardson correction. Throws ToleranceError when a
/// panel cannot meet its share of the tolerance within max_depth bisections.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          const QuadratureOptions& options = {});

/// Buyer payoff for one (omega, e_b) with E_s = 0, budget theta when capped.
double buyer_payoff_pointwise(double theta, double omega, double e_b, double d, bool cap_enabled);

/// E over omega ~ U[0,1), e_b ~ U[-E_b, E_b] of the buyer payoff. E_b = 0 is
/// the point-mass no-noise case.
double quadrature_buyer_payoff(double theta, double e_b_half_range, double d, bool cap_enabled,
                               const QuadratureOptions& options = {});

struct Bracket {
  double lo = 0.0;
  double hi = 0.0;
};

/// Bisection on E_b over the quadrature payoff until the bracket is narrower
/// than `width`. Throws BracketError without a sign change.
double find_zero_crossing(double theta, double d, bool cap_enabled, Bracket bracket,
                          double width = 1e-6);

/// Bisection on theta with E_b tied to 2 theta (d = 0, cap on).
double find_share_crossing(Bracket bracket, double width = 1e-9);

}  // namespace holdup
