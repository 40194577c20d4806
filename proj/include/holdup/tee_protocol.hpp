#pragma once

// One mediated trading session run as an explicit state machine:
//
//   Init -> Delegated -> Provisioned -> Bargained -> Accepted
//     \________\______________\____________\_______> Exited
//
// Any non-terminal state may exit (refused delegation, timeout, nothing
// disclosed, rejected offer). The secret omega never leaves the enclave on
// an exit: buyer-visible events carry no function of omega unless the
// session ends in Accepted.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "holdup/agents.hpp"
#include "holdup/core_model.hpp"
#include "holdup/security_scope.hpp"

namespace holdup {

enum class SessionState : std::uint8_t { Init, Delegated, Provisioned, Bargained, Accepted, Exited };

enum class Actor : std::uint8_t { Seller, Buyer, SellerAgent, BuyerAgent, Enclave };

enum class EventKind : std::uint8_t {
  DelegationChoice,
  SessionOpened,
  BudgetSet,
  DisclosureCapSet,
  SecretProvisioned,
  Disclosed,
  SplitComputed,
  Offered,
  Decided,
  GoodReleased,
  PaymentReleased,
  ExitReasonLogged,
  SessionTerminated,
  SecretErased,
};

enum class Visibility : std::uint8_t { EnclaveOnly, BuyerVisible, SellerVisible };

enum class ExitReason : std::uint8_t {
  DelegationRefused,
  Timeout,
  NothingDisclosed,
  OfferRejected,
};

std::string_view to_string(SessionState s);
std::string_view to_string(Actor a);
std::string_view to_string(EventKind k);
std::string_view to_string(Visibility v);
std::string_view to_string(ExitReason r);

bool is_terminal(SessionState s);
bool is_valid_transition(SessionState from, SessionState to);

struct TranscriptEvent {
  SessionState state = SessionState::Init;
  Actor actor = Actor::Enclave;
  EventKind kind = EventKind::SessionOpened;
  Visibility visibility = Visibility::EnclaveOnly;
  std::optional<double> value;

  friend bool operator==(const TranscriptEvent&, const TranscriptEvent&) = default;
};

struct Transcript {
  std::vector<TranscriptEvent> events;
  bool secret_erased = false;

  /// Events a given party observes, in order.
  std::vector<TranscriptEvent> view(Visibility who) const;
};

/// Ex ante expected payoffs each party compares when deciding to delegate.
/// Supplied by the caller (typically a Monte Carlo estimate); the session
/// does not recompute them.
struct DelegationOutlook {
  double buyer_tee = 0.0;
  double buyer_baseline = 0.0;
  double seller_tee = 0.0;
  double seller_baseline = 0.0;
};

/// Outlook for error-free agents with omega ~ U[0, 1) and security cap phi.
DelegationOutlook error_free_outlook(const MarketParams& market, double phi);

struct SessionConfig {
  MarketParams market;
  double phi = 1.0;
  ErrorModel errors;
  BuyerAgentConfig buyer;
  /// When set, the seller deliberately caps her agent below min(omega, phi).
  std::optional<double> agent_cap_override;
  DelegationOutlook outlook;
  /// Exit instead of entering this state (pre-agreed timeout).
  std::optional<SessionState> timeout_at;
};

/// Standard configuration: budget theta * min(1, phi), error-free outlook.
SessionConfig make_session_config(const MarketParams& market, double phi, const ErrorModel& errors,
                                  bool cap_enabled = true);
SessionConfig make_session_config(const MarketParams& market, const SecurityParams& security,
                                  const ErrorModel& errors, bool cap_enabled = true);

void validate(const SessionConfig& config);

struct SessionDraws {
  double eps_s = 0.0;  // seller underdisclosure, in [0, e_s]
  double e_b = 0.0;    // buyer payment error, in [-e_b, e_b]
};

struct SessionOutcome {
  bool traded = false;
  double omega_disclosed = 0.0;  // value released to the buyer
  double payment = 0.0;          // value released to the seller
  PayoffPair payoffs;
  SessionState final_state = SessionState::Init;
  std::optional<ExitReason> exit_reason;
};

struct SessionRun {
  SessionOutcome outcome;
  Transcript transcript;
};

/// Opt in when the TEE is weakly better than the baseline.
bool delegation_choice(double expected_tee_payoff, double baseline_payoff);

/// Runs one session and records the transcript.
SessionRun run_session(const SessionConfig& config, double omega, const SessionDraws& draws);

/// Same state machine without a transcript; the sampling hot path.
/// Does not re-validate the config.
SessionOutcome simulate_session(const SessionConfig& config, double omega,
                                const SessionDraws& draws);

}  // namespace holdup
