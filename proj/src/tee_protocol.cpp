#include "holdup/tee_protocol.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "holdup/error.hpp"

namespace holdup {

using detail::require;

std::string_view to_string(SessionState s) {
  switch (s) {
    case SessionState::Init: return "init";
    case SessionState::Delegated: return "delegated";
    case SessionState::Provisioned: return "provisioned";
    case SessionState::Bargained: return "bargained";
    case SessionState::Accepted: return "accepted";
    case SessionState::Exited: return "exited";
  }
  return "?";
}

std::string_view to_string(Actor a) {
  switch (a) {
    case Actor::Seller: return "seller";
    case Actor::Buyer: return "buyer";
    case Actor::SellerAgent: return "seller-agent";
    case Actor::BuyerAgent: return "buyer-agent";
    case Actor::Enclave: return "enclave";
  }
  return "?";
}

std::string_view to_string(EventKind k) {
  switch (k) {
    case EventKind::DelegationChoice: return "delegation-choice";
    case EventKind::SessionOpened: return "session-opened";
    case EventKind::BudgetSet: return "budget-set";
    case EventKind::DisclosureCapSet: return "disclosure-cap-set";
    case EventKind::SecretProvisioned: return "secret-provisioned";
    case EventKind::Disclosed: return "disclosed";
    case EventKind::SplitComputed: return "split-computed";
    case EventKind::Offered: return "offered";
    case EventKind::Decided: return "decided";
    case EventKind::GoodReleased: return "good-released";
    case EventKind::PaymentReleased: return "payment-released";
    case EventKind::ExitReasonLogged: return "exit-reason";
    case EventKind::SessionTerminated: return "session-terminated";
    case EventKind::SecretErased: return "secret-erased";
  }
  return "?";
}

std::string_view to_string(Visibility v) {
  switch (v) {
    case Visibility::EnclaveOnly: return "enclave-only";
    case Visibility::BuyerVisible: return "buyer-visible";
    case Visibility::SellerVisible: return "seller-visible";
  }
  return "?";
}

std::string_view to_string(ExitReason r) {
  switch (r) {
    case ExitReason::DelegationRefused: return "delegation-refused";
    case ExitReason::Timeout: return "timeout";
    case ExitReason::NothingDisclosed: return "nothing-disclosed";
    case ExitReason::OfferRejected: return "offer-rejected";
  }
  return "?";
}

bool is_terminal(SessionState s) {
  return s == SessionState::Accepted || s == SessionState::Exited;
}

bool is_valid_transition(SessionState from, SessionState to) {
  if (is_terminal(from)) return false;
  if (to == SessionState::Exited) return true;
  switch (from) {
    case SessionState::Init: return to == SessionState::Delegated;
    case SessionState::Delegated: return to == SessionState::Provisioned;
    case SessionState::Provisioned: return to == SessionState::Bargained;
    case SessionState::Bargained: return to == SessionState::Accepted;
    default: return false;
  }
}

std::vector<TranscriptEvent> Transcript::view(Visibility who) const {
  std::vector<TranscriptEvent> out;
  std::copy_if(events.begin(), events.end(), std::back_inserter(out),
               [who](const TranscriptEvent& e) { return e.visibility == who; });
  return out;
}

DelegationOutlook error_free_outlook(const MarketParams& market, double phi) {
  // E[min(omega, phi)] for omega ~ U[0, 1).
  const double secured = phi >= 1.0 ? 0.5 : phi - phi * phi / 2.0;
  return {(1.0 - market.theta) * secured, 0.0,
          market.theta * secured + market.alpha0 * (0.5 - secured), market.alpha0 / 2.0};
}

SessionConfig make_session_config(const MarketParams& market, double phi, const ErrorModel& errors,
                                  bool cap_enabled) {
  SessionConfig config;
  config.market = market;
  config.phi = phi;
  config.errors = errors;
  config.buyer = make_buyer_config(market.theta, phi, errors, cap_enabled);
  config.outlook = error_free_outlook(market, phi);
  validate(config);
  return config;
}

SessionConfig make_session_config(const MarketParams& market, const SecurityParams& security,
                                  const ErrorModel& errors, bool cap_enabled) {
  return make_session_config(market, scope_threshold(security), errors, cap_enabled);
}

void validate(const SessionConfig& config) {
  const MarketParams& m = config.market;
  if (m.share_only) {
    require(m.theta > 0.0 && m.theta < 1.0, "theta must lie in (0, 1)");
  } else {
    require(equilibrium_share(m.alpha0) == m.theta, "theta must equal (1 + alpha0) / 2");
  }
  require(!std::isnan(config.phi) && config.phi >= 0.0, "phi must be nonnegative");
  validate(config.errors);
  require(config.buyer.theta == m.theta, "buyer agent must target the market share");
  require(config.buyer.budget_cap >= 0.0, "budget cap must be nonnegative");
  require(config.buyer.buffer_d >= 0.0, "buffer must be nonnegative");
  if (config.agent_cap_override) {
    require(*config.agent_cap_override >= 0.0, "agent disclosure cap must be nonnegative");
  }
  const DelegationOutlook& o = config.outlook;
  require(std::isfinite(o.buyer_tee) && std::isfinite(o.buyer_baseline) &&
              std::isfinite(o.seller_tee) && std::isfinite(o.seller_baseline),
          "delegation outlook must be finite");
}

bool delegation_choice(double expected_tee_payoff, double baseline_payoff) {
  return expected_tee_payoff >= baseline_payoff;
}

namespace {

struct NullLog {
  void operator()(SessionState, Actor, EventKind, Visibility, std::optional<double> = {}) {}
  void erase() {}
};

struct RecordingLog {
  Transcript* transcript;
  void operator()(SessionState s, Actor a, EventKind k, Visibility v,
                  std::optional<double> value = {}) {
    transcript->events.push_back({s, a, k, v, value});
  }
  void erase() { transcript->secret_erased = true; }
};

double flag(bool b) { return b ? 1.0 : 0.0; }

template <class Log>
SessionOutcome execute(const SessionConfig& c, double omega, const SessionDraws& draws, Log& log) {
  validate_seller_type(omega);
  require(draws.eps_s >= 0.0, "seller disclosure error must be nonnegative (underdisclosure only)");
  require(draws.eps_s <= c.errors.e_s_max, "seller error draw outside [0, e_s]");
  require(std::abs(draws.e_b) <= c.errors.e_b_half_range, "buyer error draw outside [-e_b, e_b]");

  const double theta = c.market.theta;
  const double alpha0 = c.market.alpha0;
  SessionState state = SessionState::Init;

  auto leave = [&](ExitReason reason) {
    state = SessionState::Exited;
    log(state, Actor::Enclave, EventKind::ExitReasonLogged, Visibility::EnclaveOnly,
        static_cast<double>(reason));
    log(state, Actor::Enclave, EventKind::SessionTerminated, Visibility::BuyerVisible);
    log(state, Actor::Enclave, EventKind::SessionTerminated, Visibility::SellerVisible);
    log(state, Actor::Enclave, EventKind::SecretErased, Visibility::EnclaveOnly);
    log.erase();
    SessionOutcome out;
    out.payoffs = detail::baseline_terms(omega, alpha0);
    out.final_state = state;
    out.exit_reason = reason;
    return out;
  };
  auto advance = [&](SessionState next) {
    if (c.timeout_at == next) return false;
    state = next;
    return true;
  };

  // (2) delegation
  const bool seller_in = delegation_choice(c.outlook.seller_tee, c.outlook.seller_baseline);
  const bool buyer_in = delegation_choice(c.outlook.buyer_tee, c.outlook.buyer_baseline);
  log(state, Actor::Seller, EventKind::DelegationChoice, Visibility::SellerVisible, flag(seller_in));
  log(state, Actor::Buyer, EventKind::DelegationChoice, Visibility::BuyerVisible, flag(buyer_in));
  if (!seller_in || !buyer_in) return leave(ExitReason::DelegationRefused);
  if (!advance(SessionState::Delegated)) return leave(ExitReason::Timeout);
  log(state, Actor::Enclave, EventKind::SessionOpened, Visibility::BuyerVisible);
  log(state, Actor::Enclave, EventKind::SessionOpened, Visibility::SellerVisible);

  // (3) budget and disclosure thresholds
  if (!advance(SessionState::Provisioned)) return leave(ExitReason::Timeout);
  log(state, Actor::Buyer, EventKind::BudgetSet, Visibility::BuyerVisible,
      c.buyer.cap_enabled ? std::optional<double>(c.buyer.budget_cap) : std::nullopt);
  double agent_cap = optimal_disclosure(omega, c.phi);
  if (c.agent_cap_override) agent_cap = std::min(agent_cap, *c.agent_cap_override);
  log(state, Actor::Seller, EventKind::DisclosureCapSet, Visibility::SellerVisible, agent_cap);
  log(state, Actor::Seller, EventKind::SecretProvisioned, Visibility::EnclaveOnly, omega);

  // (4) one bargaining round inside the enclave
  if (!advance(SessionState::Bargained)) return leave(ExitReason::Timeout);
  const double omega_tilde = seller_disclose(omega, c.phi, {agent_cap, theta}, draws.eps_s);
  log(state, Actor::SellerAgent, EventKind::Disclosed, Visibility::EnclaveOnly, omega_tilde);
  if (omega_tilde <= 0.0) return leave(ExitReason::NothingDisclosed);
  const BargainSplit split = split_at_share(omega_tilde, theta);
  log(state, Actor::Enclave, EventKind::SplitComputed, Visibility::EnclaveOnly, split.price);
  const double offer = buyer_offer(omega_tilde, c.buyer, draws.e_b);
  log(state, Actor::BuyerAgent, EventKind::Offered, Visibility::EnclaveOnly, offer);
  const bool accepted = seller_accept(offer, omega_tilde, theta);
  log(state, Actor::SellerAgent, EventKind::Decided, Visibility::EnclaveOnly, flag(accepted));
  if (!accepted) return leave(ExitReason::OfferRejected);

  // (5) release on mutual accept
  if (!advance(SessionState::Accepted)) return leave(ExitReason::Timeout);
  log(state, Actor::Enclave, EventKind::GoodReleased, Visibility::BuyerVisible, omega_tilde);
  log(state, Actor::Enclave, EventKind::PaymentReleased, Visibility::SellerVisible, offer);

  SessionOutcome out;
  out.traded = true;
  out.omega_disclosed = omega_tilde;
  out.payment = offer;
  out.payoffs = c.market.share_only ? detail::invest_terms(omega, omega_tilde, offer, alpha0)
                                    : invest_payoffs(omega, omega_tilde, offer, alpha0);
  out.final_state = state;
  return out;
}

}  // namespace

SessionRun run_session(const SessionConfig& config, double omega, const SessionDraws& draws) {
  validate(config);
  SessionRun run;
  RecordingLog log{&run.transcript};
  run.outcome = execute(config, omega, draws, log);
  return run;
}

SessionOutcome simulate_session(const SessionConfig& config, double omega,
                                const SessionDraws& draws) {
  NullLog log;
  return execute(config, omega, draws, log);
}

}  // namespace holdup
