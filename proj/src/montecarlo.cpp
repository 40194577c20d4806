#include "holdup/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <string>
#include <thread>

#include "holdup/error.hpp"

namespace holdup {

using detail::require;

namespace {

constexpr std::uint64_t kBlockSize = std::uint64_t{1} << 15;

// Welford accumulator; blocks are merged with Chan's pairwise update.
struct Moments {
  double n = 0.0;
  double mean = 0.0;
  double m2 = 0.0;

  void add(double x) {
    n += 1.0;
    const double delta = x - mean;
    mean += delta / n;
    m2 += delta * (x - mean);
  }

  void merge(const Moments& o) {
    if (o.n == 0.0) return;
    if (n == 0.0) {
      *this = o;
      return;
    }
    const double total = n + o.n;
    const double delta = o.mean - mean;
    mean += delta * (o.n / total);
    m2 += o.m2 + delta * delta * (n * o.n / total);
    n = total;
  }
};

void check_share(double theta) {
  require(theta > 0.0 && theta < 1.0, "theta must lie in (0, 1)");
}

}  // namespace

unsigned default_workers() {
  if (const char* env = std::getenv("HOLDUP_WORKERS"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && n > 0) return static_cast<unsigned>(n);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

McEstimate estimate_mean(const McOptions& options,
                         const std::function<double(SampleStream&)>& per_sample) {
  require(options.samples >= 1, "samples must be at least 1");
  const std::uint64_t blocks = (options.samples + kBlockSize - 1) / kBlockSize;
  std::vector<Moments> partial(blocks);

  std::atomic<std::uint64_t> next{0};
  auto work = [&] {
    for (std::uint64_t b = next++; b < blocks; b = next++) {
      const std::uint64_t begin = b * kBlockSize;
      const std::uint64_t end = std::min(options.samples, begin + kBlockSize);
      Moments m;
      for (std::uint64_t i = begin; i < end; ++i) {
        SampleStream stream(options.seed, i);
        m.add(per_sample(stream));
      }
      partial[b] = m;
    }
  };

  const unsigned requested = options.workers == 0 ? default_workers() : options.workers;
  const auto workers = static_cast<unsigned>(std::min<std::uint64_t>(requested, blocks));
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }

  Moments total;
  for (const Moments& m : partial) total.merge(m);

  McEstimate est;
  est.mean = total.mean;
  est.samples = options.samples;
  est.seed = options.seed;
  if (total.n > 1.0) {
    const double variance = std::max(0.0, total.m2 / (total.n - 1.0));
    est.std_error = std::sqrt(variance / total.n);
  }
  return est;
}

SampledSession draw_session(SampleStream& stream, const ErrorModel& errors) {
  const double u_omega = stream.uniform();
  const double u_buyer = stream.uniform();
  const double u_seller = stream.uniform();
  SampledSession s;
  s.omega = u_omega;
  s.draws.e_b = errors.e_b_half_range == 0.0 ? 0.0 : errors.e_b_half_range * (2.0 * u_buyer - 1.0);
  s.draws.eps_s = errors.e_s_max * u_seller;
  return s;
}

SessionConfig committed_session(const PayoffScenario& scenario) {
  SessionConfig config =
      make_session_config(scenario.market, scenario.phi, scenario.errors, scenario.cap_enabled);
  config.outlook = DelegationOutlook{};  // all ties: both parties delegate
  return config;
}

McEstimate estimate_buyer_payoff(const PayoffScenario& scenario, const McOptions& options) {
  const SessionConfig config = committed_session(scenario);
  return estimate_mean(options, [&](SampleStream& stream) {
    const SampledSession s = draw_session(stream, config.errors);
    return simulate_session(config, s.omega, s.draws).payoffs.u_buyer;
  });
}

McEstimate estimate_buyer_payoff(const MarketParams& market, const ErrorModel& errors,
                                 bool cap_enabled, std::uint64_t samples, std::uint64_t seed) {
  return estimate_buyer_payoff(PayoffScenario{market, errors, cap_enabled},
                               McOptions{samples, seed, 0});
}

McEstimate estimate_seller_payoff(const PayoffScenario& scenario, const McOptions& options) {
  const SessionConfig config = committed_session(scenario);
  return estimate_mean(options, [&](SampleStream& stream) {
    const SampledSession s = draw_session(stream, config.errors);
    return simulate_session(config, s.omega, s.draws).payoffs.u_seller;
  });
}

McEstimate estimate_seller_payoff(const MarketParams& market, const ErrorModel& errors,
                                  bool cap_enabled, std::uint64_t samples, std::uint64_t seed) {
  return estimate_seller_payoff(PayoffScenario{market, errors, cap_enabled},
                                McOptions{samples, seed, 0});
}

DelegationOutlook estimate_outlook(const PayoffScenario& scenario, const McOptions& options) {
  DelegationOutlook outlook;
  outlook.buyer_tee = estimate_buyer_payoff(scenario, options).mean;
  outlook.seller_tee = estimate_seller_payoff(scenario, options).mean;
  outlook.buyer_baseline = 0.0;
  outlook.seller_baseline = scenario.market.alpha0 / 2.0;
  return outlook;
}

double expected_buyer_payoff_closed(double theta) {
  check_share(theta);
  return (6.0 - 11.0 * theta) / 24.0;
}

PayoffDecomposition decompose_buyer_payoff(double theta) {
  check_share(theta);
  return {(1.0 - theta) / 2.0, 0.5, (theta + 6.0) / 24.0};
}

double buffer_derivative_closed(double theta) {
  check_share(theta);
  return (1.0 - 2.0 * theta) / (8.0 * theta);
}

McEstimate estimate_buffer_derivative(double theta, double h, const McOptions& options) {
  check_share(theta);
  require(h > 0.0 && h < theta, "finite-difference step must satisfy 0 < h < theta");
  const MarketParams market = market_from_share(theta);
  const ErrorModel base{2.0 * theta, 0.0, 0.0};
  const ErrorModel buffered{2.0 * theta, 0.0, h};
  const SessionConfig at_zero = committed_session({market, base, true});
  const SessionConfig at_h = committed_session({market, buffered, true});
  return estimate_mean(options, [&](SampleStream& stream) {
    const SampledSession s = draw_session(stream, base);
    const double lo = simulate_session(at_zero, s.omega, s.draws).payoffs.u_buyer;
    const double hi = simulate_session(at_h, s.omega, s.draws).payoffs.u_buyer;
    return (hi - lo) / h;
  });
}

ErrorThreshold max_error_threshold() {
  // The closed form is positive near 0 and negative near 1; bisect to the
  // last representable midpoint.
  double lo = 1e-9;
  double hi = 1.0 - 1e-9;
  while (true) {
    const double mid = std::midpoint(lo, hi);
    if (mid <= lo || mid >= hi) break;
    (expected_buyer_payoff_closed(mid) > 0.0 ? lo : hi) = mid;
  }
  const double root =
      std::abs(expected_buyer_payoff_closed(lo)) <= std::abs(expected_buyer_payoff_closed(hi)) ? lo
                                                                                               : hi;
  return {root, 2.0 * root};
}

std::vector<FrontierPoint> robustness_frontier(double alpha0,
                                               const std::vector<ErrorGridPoint>& grid,
                                               const McOptions& options) {
  require(!grid.empty(), "error grid must be nonempty");
  const MarketParams market = market_from_alpha0(alpha0);
  std::vector<FrontierPoint> out;
  out.reserve(grid.size());
  for (const ErrorGridPoint& g : grid) {
    const PayoffScenario scenario{market, ErrorModel{g.e_b, g.e_s, 0.0}, true};
    const McEstimate buyer = estimate_buyer_payoff(scenario, options);
    const McEstimate seller = estimate_seller_payoff(scenario, options);
    out.push_back({g.e_s, g.e_b, buyer.mean, seller.mean - alpha0 / 2.0, buyer.std_error,
                   seller.std_error});
  }
  return out;
}

}  // namespace holdup
