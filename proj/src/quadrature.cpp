#include "holdup/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "holdup/error.hpp"

namespace holdup {

using detail::require;

namespace {

struct Panel {
  double a, m, b;
  double fa, fm, fb;
  double whole;
};

double simpson(double a, double b, double fa, double fm, double fb) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double refine(const std::function<double(double)>& f, const Panel& p, double tol, int depth,
              const QuadratureOptions& opt) {
  const double lm = std::midpoint(p.a, p.m);
  const double rm = std::midpoint(p.m, p.b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = simpson(p.a, p.m, p.fa, flm, p.fm);
  const double right = simpson(p.m, p.b, p.fm, frm, p.fb);
  const double delta = left + right - p.whole;
  if (depth >= opt.min_depth && std::abs(delta) <= 15.0 * tol) {
    return left + right + delta / 15.0;
  }
  if (depth >= opt.max_depth) {
    throw ToleranceError("adaptive quadrature exceeded its refinement budget on [" +
                         std::to_string(p.a) + ", " + std::to_string(p.b) + "]");
  }
  return refine(f, {p.a, lm, p.m, p.fa, flm, p.fm, left}, tol / 2.0, depth + 1, opt) +
         refine(f, {p.m, rm, p.b, p.fm, frm, p.fb, right}, tol / 2.0, depth + 1, opt);
}

// Integrates over [a, b] split at the given interior breakpoints; each piece
// gets tolerance in proportion to its length.
double integrate_pieces(const std::function<double(double)>& f, double a, double b,
                        std::vector<double> cuts, const QuadratureOptions& opt) {
  cuts.push_back(a);
  cuts.push_back(b);
  std::erase_if(cuts, [&](double x) { return !(x >= a && x <= b); });
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    QuadratureOptions piece = opt;
    piece.abs_tolerance = opt.abs_tolerance * (cuts[i + 1] - cuts[i]) / (b - a);
    total += integrate_adaptive(f, cuts[i], cuts[i + 1], piece);
  }
  return total;
}

}  // namespace

double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          const QuadratureOptions& options) {
  require(options.abs_tolerance > 0.0, "tolerance must be positive");
  if (a == b) return 0.0;
  const double m = std::midpoint(a, b);
  const double fa = f(a);
  const double fm = f(m);
  const double fb = f(b);
  return refine(f, {a, m, b, fa, fm, fb, simpson(a, b, fa, fm, fb)}, options.abs_tolerance, 0,
                options);
}

namespace {

enum class Region { NoTrade, UnderBudget, Capped };

Region classify(double theta, double omega, double e_b, double d, bool cap_enabled) {
  // The offer falls short of theta * omega exactly when e_b < -d.
  if (e_b < -d) return Region::NoTrade;
  if (cap_enabled && theta * omega + d + e_b > theta) return Region::Capped;
  return Region::UnderBudget;
}

double region_payoff(Region region, double theta, double omega, double e_b, double d) {
  switch (region) {
    case Region::NoTrade: return 0.0;
    case Region::UnderBudget: return omega - (theta * omega + d + e_b);
    case Region::Capped: return omega - theta;
  }
  return 0.0;
}

}  // namespace

double buyer_payoff_pointwise(double theta, double omega, double e_b, double d, bool cap_enabled) {
  return region_payoff(classify(theta, omega, e_b, d, cap_enabled), theta, omega, e_b, d);
}

double quadrature_buyer_payoff(double theta, double e_b_half_range, double d, bool cap_enabled,
                               const QuadratureOptions& options) {
  require(theta > 0.0 && theta < 1.0, "theta must lie in (0, 1)");
  require(e_b_half_range >= 0.0, "E_b must be nonnegative");
  require(d >= 0.0, "buffer d must be nonnegative");
  const double eb = e_b_half_range;

  if (eb == 0.0) {
    auto at_zero = [&](double omega) {
      return buyer_payoff_pointwise(theta, omega, 0.0, d, cap_enabled);
    };
    // Cap binds once theta * omega + d reaches theta.
    return integrate_pieces(at_zero, 0.0, 1.0, {1.0 - d / theta}, options);
  }

  // Inner integral over e_b, region by region. Each piece between the
  // acceptance edge -d and the cap edge theta * (1 - omega) - d lies in a
  // single region; the payoff is integrated with that region's formula so
  // the jump at -d never sits inside a panel.
  auto inner = [&](double omega) {
    std::vector<double> cuts{-eb, eb, -d};
    if (cap_enabled) cuts.push_back(theta * (1.0 - omega) - d);
    std::erase_if(cuts, [&](double x) { return !(x >= -eb && x <= eb); });
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    QuadratureOptions piece_opt = options;
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
      const double lo = cuts[i];
      const double hi = cuts[i + 1];
      const Region region = classify(theta, omega, std::midpoint(lo, hi), d, cap_enabled);
      if (region == Region::NoTrade) continue;
      piece_opt.abs_tolerance = 1e-2 * options.abs_tolerance * (hi - lo);
      total += integrate_adaptive(
          [&](double e) { return region_payoff(region, theta, omega, e, d); }, lo, hi, piece_opt);
    }
    return total / (2.0 * eb);
  };
  // The cap edge crosses +-E_b at these omegas, where the inner value kinks.
  std::vector<double> outer_cuts;
  if (cap_enabled) {
    outer_cuts.push_back(1.0 - (d + eb) / theta);
    outer_cuts.push_back(1.0 - (d - eb) / theta);
  }
  return integrate_pieces(inner, 0.0, 1.0, outer_cuts, options);
}

namespace {

template <class F>
double bisect(F&& f, Bracket bracket, double width) {
  require(bracket.lo < bracket.hi, "bracket must satisfy lo < hi");
  require(width > 0.0, "bracket width must be positive");
  double lo = bracket.lo;
  double hi = bracket.hi;
  double f_lo = f(lo);
  const double f_hi = f(hi);
  if (f_lo == 0.0) return lo;
  if (f_hi == 0.0) return hi;
  if ((f_lo > 0.0) == (f_hi > 0.0)) {
    throw BracketError("no sign change on [" + std::to_string(lo) + ", " + std::to_string(hi) +
                       "]");
  }
  while (hi - lo >= width) {
    const double mid = std::midpoint(lo, hi);
    const double f_mid = f(mid);
    if (f_mid == 0.0) return mid;
    if ((f_mid > 0.0) == (f_lo > 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return std::midpoint(lo, hi);
}

}  // namespace

double find_zero_crossing(double theta, double d, bool cap_enabled, Bracket bracket, double width) {
  require(bracket.lo > 0.0, "E_b bracket must be positive");
  return bisect([&](double eb) { return quadrature_buyer_payoff(theta, eb, d, cap_enabled); },
                bracket, width);
}

double find_share_crossing(Bracket bracket, double width) {
  require(bracket.lo > 0.0 && bracket.hi < 1.0, "theta bracket must lie in (0, 1)");
  return bisect([](double theta) { return quadrature_buyer_payoff(theta, 2.0 * theta, 0.0, true); },
                bracket, width);
}

}  // namespace holdup
