#include "holdup/app/commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <memory>
#include <optional>
#include <set>

#include <CLI11.hpp>

#include "holdup/app/acceptance.hpp"
#include "holdup/app/format.hpp"
#include "holdup/app/report.hpp"
#include "holdup/app/run_config.hpp"
#include "holdup/app/sweep.hpp"
#include "holdup/error.hpp"
#include "holdup/montecarlo.hpp"
#include "holdup/quadrature.hpp"
#include "holdup/security_scope.hpp"
#include "holdup/tee_protocol.hpp"

namespace holdup::app {

namespace {

template <class T>
std::optional<T> first_of(const std::optional<T>& flag, const std::optional<T>& file) {
  return flag ? flag : file;
}

template <class T>
T pick(const std::optional<T>& flag, const std::optional<T>& file, T fallback) {
  return first_of(flag, file).value_or(fallback);
}

Value optional_value(const std::optional<double>& x) {
  if (x) return *x;
  return std::monostate{};
}

struct CommonFlags {
  std::optional<std::string> config;
  std::optional<std::string> format;
  std::optional<std::string> output;
};

struct MarketFlags {
  std::optional<double> theta;
  std::optional<double> alpha0;
};

struct SecurityFlags {
  std::optional<std::int64_t> k;
  std::optional<std::int64_t> n;
  std::optional<double> p;
  std::optional<double> gamma;
  std::optional<double> penalty;
  std::optional<double> fixed_cost;

  bool any() const { return k || n || p || gamma || penalty || fixed_cost; }
};

struct ErrorFlags {
  std::optional<double> e_b;
  std::optional<double> e_s;
  std::optional<double> buffer;
  bool no_cap = false;
};

struct McFlags {
  std::optional<std::uint64_t> samples;
  std::optional<std::uint64_t> seed;
};

void add_common(CLI::App* app, CommonFlags& f, bool csv_default) {
  app->add_option("--config", f.config, "JSON run configuration; flags override it");
  app->add_option("--format", f.format,
                  csv_default ? "csv (default) or json-lines" : "text (default) or json-lines");
  app->add_option("--output", f.output, "write to this file instead of stdout");
}

void add_market(CLI::App* app, MarketFlags& f) {
  app->add_option("--theta", f.theta, "seller's equilibrium share, in (0, 1)");
  app->add_option("--alpha0", f.alpha0, "seller's retained fraction, in (0, 1]");
}

void add_security(CLI::App* app, SecurityFlags& f) {
  app->add_option("--k", f.k, "collusion threshold");
  app->add_option("--n", f.n, "number of providers (>= k)");
  app->add_option("--p", f.p, "per-breach detection probability");
  app->add_option("--gamma", f.gamma, "collusion detection amplification (>= 1)");
  app->add_option("--C", f.penalty, "penalty when caught");
  app->add_option("--fixed-cost", f.fixed_cost, "fixed cost c of the mediated channel");
}

void add_errors(CLI::App* app, ErrorFlags& f) {
  app->add_option("--eb", f.e_b, "buyer payment error half-range E_b");
  app->add_option("--es", f.e_s, "seller underdisclosure bound E_s");
  app->add_option("--buffer", f.buffer, "overpayment buffer d");
  app->add_flag("--no-cap", f.no_cap, "disable the buyer's budget cap");
}

void add_mc(CLI::App* app, McFlags& f) {
  app->add_option("--samples", f.samples, "Monte Carlo sample count");
  app->add_option("--seed", f.seed, "Monte Carlo seed");
}

/// Market from flags, then the config file; a flag of either kind replaces
/// the file's market entirely.
std::optional<MarketParams> resolve_market(const MarketFlags& f, const RunConfig& cfg) {
  if (f.theta && f.alpha0) throw ConfigError("give --theta or --alpha0, not both");
  if (f.alpha0) return market_from_alpha0(*f.alpha0);
  if (f.theta) return market_from_share(*f.theta);
  if (cfg.alpha0) return market_from_alpha0(*cfg.alpha0);
  if (cfg.theta) return market_from_share(*cfg.theta);
  return std::nullopt;
}

ErrorModel resolve_errors(const ErrorFlags& f, const RunConfig& cfg) {
  ErrorModel e{pick(f.e_b, cfg.e_b, 0.0), pick(f.e_s, cfg.e_s, 0.0), pick(f.buffer, cfg.buffer, 0.0)};
  validate(e);
  return e;
}

bool has_security(const SecurityFlags& f, const RunConfig& cfg) {
  return f.any() || cfg.k || cfg.n || cfg.p || cfg.gamma || cfg.penalty || cfg.fixed_cost;
}

/// Missing k, p, gamma or C without a fallback is a usage error.
SecurityParams resolve_security(const SecurityFlags& f, const RunConfig& cfg,
                                const SecurityParams* fallback = nullptr) {
  auto need = [&](auto value, const char* flag) {
    if (!value) throw ConfigError(std::string("missing ") + flag);
    return *value;
  };
  SecurityParams sp;
  const auto k = first_of(f.k, cfg.k);
  const auto p = first_of(f.p, cfg.p);
  const auto gamma = first_of(f.gamma, cfg.gamma);
  const auto penalty = first_of(f.penalty, cfg.penalty);
  sp.k = fallback ? k.value_or(fallback->k) : need(k, "--k");
  sp.p = fallback ? p.value_or(fallback->p) : need(p, "--p");
  sp.gamma = fallback ? gamma.value_or(fallback->gamma) : need(gamma, "--gamma");
  sp.penalty = fallback ? penalty.value_or(fallback->penalty) : need(penalty, "--C");
  sp.n = pick(f.n, cfg.n, fallback ? std::max(fallback->n, sp.k) : sp.k);
  sp.fixed_cost = pick(f.fixed_cost, cfg.fixed_cost, 0.0);
  validate(sp);
  return sp;
}

McOptions resolve_mc(const McFlags& f, const RunConfig& cfg, std::uint64_t default_samples,
                     const CliEnv& env) {
  McOptions o;
  o.samples = pick(f.samples, cfg.samples, default_samples);
  o.seed = pick(f.seed, cfg.seed, std::uint64_t{1});
  o.workers = env.workers;
  if (o.samples < 1) throw ConfigError("--samples must be at least 1");
  return o;
}

/// Output stream plus format; owns the file when --output or output.path is set.
class Sink {
 public:
  Sink(const CommonFlags& f, const RunConfig& cfg, std::ostream& fallback, bool csv_default)
      : stream_(&fallback) {
    if (f.format) {
      format_ = parse_format(*f.format);
    } else if (cfg.format) {
      format_ = *cfg.format;
    } else {
      format_ = csv_default ? OutputFormat::Csv : OutputFormat::Text;
    }
    // Tabular commands take csv, the log-style ones text; json-lines everywhere.
    const OutputFormat native = csv_default ? OutputFormat::Csv : OutputFormat::Text;
    if (format_ != native && format_ != OutputFormat::JsonLines) {
      throw ConfigError("this subcommand writes " + std::string(to_string(native)) +
                        " or json-lines");
    }
    if (const auto path = first_of(f.output, cfg.path)) {
      file_ = std::make_unique<std::ofstream>(*path);
      if (!*file_) throw ConfigError("cannot write '" + *path + "'");
      stream_ = file_.get();
    }
  }

  std::ostream& stream() { return *stream_; }
  OutputFormat format() const { return format_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
  OutputFormat format_ = OutputFormat::Csv;
};

RunConfig load_config(const CommonFlags& f) {
  return f.config ? load_run_config(*f.config) : RunConfig{};
}

// ---------------------------------------------------------------------------

struct ScopeFlags {
  CommonFlags common;
  SecurityFlags security;
  std::optional<double> omega;
  std::optional<double> revenue;
  std::optional<double> margin;
  std::optional<double> discount;
  std::optional<std::int64_t> providers;
};

int cmd_scope(const ScopeFlags& f, std::ostream& out) {
  const RunConfig cfg = load_config(f.common);
  const int npv_flags = int{f.revenue.has_value()} + int{f.margin.has_value()} +
                        int{f.discount.has_value()} + int{f.providers.has_value()};
  if (npv_flags != 0 && npv_flags != 4) {
    throw ConfigError("--revenue, --margin, --discount and --providers go together");
  }
  std::optional<PenaltyEstimate> npv;
  if (npv_flags == 4) npv = estimate_penalty(*f.revenue, *f.margin, *f.discount, *f.providers);

  SecurityFlags flags = f.security;
  if (npv && !flags.penalty && !cfg.penalty) flags.penalty = npv->per_provider_penalty;
  if (npv && !flags.n && !cfg.n) flags.n = std::max(npv->providers, pick(flags.k, cfg.k, std::int64_t{1}));
  const SecurityParams sp = resolve_security(flags, cfg);

  Sink sink(f.common, cfg, out, true);
  RecordWriter writer(sink.stream(), sink.format(), "scope");
  const double p_k = detection_probability(sp.k, sp.p, sp.gamma);
  const double phi = scope_threshold(sp);
  Record row{{"k", sp.k},       {"n", sp.n},   {"p", sp.p},
             {"gamma", sp.gamma}, {"C", sp.penalty}, {"p_k", p_k},
             {"phi", phi}};
  if (f.omega) {
    row.emplace_back("omega", *f.omega);
    row.emplace_back("secure", ic_secure(*f.omega, sp));
    row.emplace_back("net_surplus", *f.omega - sp.fixed_cost);
  }
  if (npv) {
    row.emplace_back("revenue", npv->annual_revenue);
    row.emplace_back("margin", npv->margin);
    row.emplace_back("discount", npv->discount_rate);
    row.emplace_back("providers", npv->providers);
    row.emplace_back("npv", npv->npv);
    row.emplace_back("per_provider_penalty", npv->per_provider_penalty);
  }
  writer.write(row);
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct SessionFlags {
  CommonFlags common;
  SecurityFlags security;
  ErrorFlags errors;
  McFlags mc;
  std::optional<double> alpha0;
  std::optional<double> omega;
  std::optional<double> phi;
  std::optional<double> eb_draw;
  std::optional<double> es_draw;
  std::optional<double> agent_cap;
  std::optional<std::string> timeout_at;
  std::string view = "all";
};

SessionState parse_state(const std::string& name) {
  for (SessionState s : {SessionState::Delegated, SessionState::Provisioned,
                         SessionState::Bargained, SessionState::Accepted}) {
    if (to_string(s) == name) return s;
  }
  throw ConfigError("--timeout-at takes delegated, provisioned, bargained or accepted");
}

std::optional<Visibility> parse_view(const std::string& name) {
  if (name == "all") return std::nullopt;
  if (name == "buyer") return Visibility::BuyerVisible;
  if (name == "seller") return Visibility::SellerVisible;
  if (name == "enclave") return Visibility::EnclaveOnly;
  throw ConfigError("--view takes all, buyer, seller or enclave");
}

int cmd_session(const SessionFlags& f, std::ostream& out, const CliEnv& env) {
  const RunConfig cfg = load_config(f.common);
  const auto alpha0 = first_of(f.alpha0, cfg.alpha0);
  if (!alpha0) throw ConfigError("session needs --alpha0");
  if (!f.omega) throw ConfigError("session needs --omega");
  const MarketParams market = market_from_alpha0(*alpha0);
  const double omega = *f.omega;
  validate_seller_type(omega);

  double phi = 1.0;
  if (f.phi) {
    phi = *f.phi;
  } else if (has_security(f.security, cfg)) {
    phi = scope_threshold(resolve_security(f.security, cfg));
  }

  // Explicit draws widen the supports so they are always admissible.
  ErrorModel errors = resolve_errors(f.errors, cfg);
  if (f.eb_draw) errors.e_b_half_range = std::max(errors.e_b_half_range, std::abs(*f.eb_draw));
  if (f.es_draw) {
    if (*f.es_draw < 0.0) throw DomainError("--es-draw must be nonnegative (underdisclosure only)");
    errors.e_s_max = std::max(errors.e_s_max, *f.es_draw);
  }
  const McOptions mc = resolve_mc(f.mc, cfg, 100'000, env);
  SampleStream stream(mc.seed, 0);
  const SessionDraws sampled = draw_session(stream, errors).draws;
  const SessionDraws draws{f.es_draw.value_or(sampled.eps_s), f.eb_draw.value_or(sampled.e_b)};

  const bool cap = !f.errors.no_cap;
  SessionConfig config = make_session_config(market, phi, errors, cap);
  if (errors.e_b_half_range > 0.0 || errors.e_s_max > 0.0) {
    config.outlook = estimate_outlook(PayoffScenario{market, errors, cap, phi}, mc);
  }
  config.agent_cap_override = f.agent_cap;
  if (f.timeout_at) config.timeout_at = parse_state(*f.timeout_at);
  const std::optional<Visibility> view = parse_view(f.view);

  const SessionRun run = run_session(config, omega, draws);
  const SessionOutcome& o = run.outcome;

  Sink sink(f.common, cfg, out, false);
  RecordWriter outcome_writer(sink.stream(), sink.format(), "outcome");
  outcome_writer.write({
      {"alpha0", market.alpha0},
      {"theta", market.theta},
      {"phi", phi},
      {"omega", omega},
      {"eps_s", draws.eps_s},
      {"e_b", draws.e_b},
      {"traded", o.traded},
      {"omega_disclosed", o.omega_disclosed},
      {"payment", o.payment},
      {"u_seller", o.payoffs.u_seller},
      {"u_buyer", o.payoffs.u_buyer},
      {"final_state", std::string(to_string(o.final_state))},
      {"exit_reason", o.exit_reason ? Value(std::string(to_string(*o.exit_reason)))
                                    : Value(std::monostate{})},
      {"secret_erased", run.transcript.secret_erased},
  });

  RecordWriter event_writer(sink.stream(), sink.format(), "event");
  std::int64_t seq = 0;
  for (const TranscriptEvent& e : run.transcript.events) {
    const std::int64_t index = seq++;
    if (view && e.visibility != *view) continue;
    Value value = std::monostate{};
    if (e.kind == EventKind::ExitReasonLogged && e.value) {
      value = std::string(to_string(static_cast<ExitReason>(static_cast<int>(*e.value))));
    } else if (e.value) {
      value = *e.value;
    }
    event_writer.write({{"seq", index},
                        {"state", std::string(to_string(e.state))},
                        {"actor", std::string(to_string(e.actor))},
                        {"kind", std::string(to_string(e.kind))},
                        {"visibility", std::string(to_string(e.visibility))},
                        {"value", value}});
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct McCommandFlags {
  CommonFlags common;
  MarketFlags market;
  ErrorFlags errors;
  McFlags mc;
};

int cmd_mc(const McCommandFlags& f, std::ostream& out, const CliEnv& env) {
  const RunConfig cfg = load_config(f.common);
  const auto market = resolve_market(f.market, cfg);
  if (!market) throw ConfigError("mc needs --theta or --alpha0");
  if (!first_of(f.errors.e_b, cfg.e_b)) throw ConfigError("mc needs --eb");
  const ErrorModel errors = resolve_errors(f.errors, cfg);
  const bool cap = !f.errors.no_cap;
  const McOptions mc = resolve_mc(f.mc, cfg, 1'000'000, env);
  const PayoffScenario scenario{*market, errors, cap};

  const McEstimate buyer = estimate_buyer_payoff(scenario, mc);
  std::optional<double> quadrature;
  if (errors.e_s_max == 0.0) {
    quadrature = quadrature_buyer_payoff(market->theta, errors.e_b_half_range, errors.buffer_d, cap);
  }

  Record row{{"theta", market->theta},
             {"alpha0", market->share_only ? Value(std::monostate{}) : Value(market->alpha0)},
             {"e_b", errors.e_b_half_range},
             {"e_s", errors.e_s_max},
             {"d", errors.buffer_d},
             {"cap", cap},
             {"separated", minimally_separated(errors, market->theta)},
             {"samples", mc.samples},
             {"seed", mc.seed},
             {"mc_mean", buyer.mean},
             {"mc_stderr", buyer.std_error},
             {"quadrature", optional_value(quadrature)},
             {"closed_form",
              optional_value(closed_form_if_applicable(market->theta, errors, cap))}};
  if (!market->share_only) {
    const McEstimate seller = estimate_seller_payoff(scenario, mc);
    row.emplace_back("seller_mean", seller.mean);
    row.emplace_back("seller_stderr", seller.std_error);
    row.emplace_back("seller_baseline", market->alpha0 / 2.0);
  }
  Sink sink(f.common, cfg, out, true);
  RecordWriter writer(sink.stream(), sink.format(), "mc");
  writer.write(row);
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct SweepFlags {
  CommonFlags common;
  MarketFlags market;
  ErrorFlags errors;
  SecurityFlags security;
  McFlags mc;
  std::string parameter;
  double from = 0.0;
  double to = 0.0;
  int steps = 0;
  bool cap_variants = false;
  bool tie_e_b = false;
};

int cmd_sweep(const SweepFlags& f, std::ostream& out, const CliEnv& env) {
  const RunConfig cfg = load_config(f.common);
  SweepSpec spec{parse_sweep_parameter(f.parameter), f.from, f.to, f.steps, f.cap_variants};
  validate(spec);

  Sink sink(f.common, cfg, out, true);
  RecordWriter writer(sink.stream(), sink.format(), "sweep");
  const std::string name(to_string(spec.parameter));

  if (is_security_parameter(spec.parameter)) {
    const SecurityParams defaults{3, 5, 0.005, 2.0, 1.0, 0.0};
    for (const ScopeRow& r : scope_sweep(spec, resolve_security(f.security, cfg, &defaults))) {
      writer.write({{"parameter", name},
                    {"value", r.value},
                    {"k", r.params.k},
                    {"n", r.params.n},
                    {"p", r.params.p},
                    {"gamma", r.params.gamma},
                    {"C", r.params.penalty},
                    {"p_k", r.p_k},
                    {"phi", r.phi}});
    }
    return kExitOk;
  }

  PayoffBase base;
  base.market = resolve_market(f.market, cfg).value_or(market_from_share(0.6));
  base.errors = resolve_errors(f.errors, cfg);
  base.cap_enabled = !f.errors.no_cap;
  base.tie_e_b = f.tie_e_b;
  const McOptions mc = resolve_mc(f.mc, cfg, 1'000'000, env);
  for (const PayoffRow& r : payoff_sweep(spec, base, mc)) {
    writer.write({{"parameter", name},
                  {"value", r.value},
                  {"cap", r.cap_enabled},
                  {"theta", r.market.theta},
                  {"e_b", r.errors.e_b_half_range},
                  {"e_s", r.errors.e_s_max},
                  {"d", r.errors.buffer_d},
                  {"mc_mean", r.mc.mean},
                  {"mc_stderr", r.mc.std_error},
                  {"quadrature", optional_value(r.quadrature)},
                  {"closed_form", optional_value(r.closed_form)}});
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct VerifyFlags {
  CommonFlags common;
  McFlags mc;
  std::vector<int> only;
};

int cmd_verify(const VerifyFlags& f, std::ostream& out, const CliEnv& env) {
  const RunConfig cfg = load_config(f.common);
  AcceptanceOptions options;
  options.samples = first_of(f.mc.samples, cfg.samples);
  options.seed = pick(f.mc.seed, cfg.seed, std::uint64_t{1});
  options.workers = env.workers;
  if (options.samples && *options.samples < 1) throw ConfigError("--samples must be at least 1");

  const std::set<int> wanted(f.only.begin(), f.only.end());
  for (int id : wanted) {
    const auto& all = acceptance_criteria();
    if (std::none_of(all.begin(), all.end(), [id](const Criterion& c) { return c.id == id; })) {
      throw ConfigError("no criterion " + std::to_string(id));
    }
  }

  Sink sink(f.common, cfg, out, false);
  RecordWriter writer(sink.stream(), sink.format(), "criterion");
  bool all_passed = true;
  for (const Criterion& c : acceptance_criteria()) {
    if (!wanted.empty() && !wanted.contains(c.id)) continue;
    const CriterionResult r = run_criterion(c, options);
    all_passed = all_passed && r.passed;
    if (sink.format() == OutputFormat::Text) {
      sink.stream() << (r.passed ? "PASS" : "FAIL") << ' ' << r.id << ' ' << r.name << ": "
                    << r.detail << std::endl;
    } else {
      writer.write({{"id", static_cast<std::int64_t>(r.id)},
                    {"name", r.name},
                    {"passed", r.passed},
                    {"detail", r.detail}});
      sink.stream().flush();
    }
  }
  return all_passed ? kExitOk : kExitFailure;
}

// ---------------------------------------------------------------------------

struct ReportFlags {
  std::optional<std::string> format;
  std::optional<std::string> output;
  std::vector<std::string> files;
};

int cmd_report(const ReportFlags& f, std::ostream& out) {
  Sink sink({std::nullopt, f.format, f.output}, RunConfig{}, out, true);
  RecordWriter writer(sink.stream(), sink.format(), "summary");
  write_report({f.files.begin(), f.files.end()}, writer);
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            const CliEnv& env) {
  CLI::App app{"Hold-up, disclosure and mediated bargaining experiments", "holdup"};
  app.require_subcommand(1);

  ScopeFlags scope;
  auto* scope_cmd = app.add_subcommand("scope", "security scope: p_k, phi and the penalty chain");
  add_common(scope_cmd, scope.common, true);
  add_security(scope_cmd, scope.security);
  scope_cmd->add_option("--omega", scope.omega, "value to test against phi");
  scope_cmd->add_option("--revenue", scope.revenue, "annual confidential-compute revenue");
  scope_cmd->add_option("--margin", scope.margin, "profit margin, in [0, 1]");
  scope_cmd->add_option("--discount", scope.discount, "discount rate");
  scope_cmd->add_option("--providers", scope.providers, "providers sharing the penalty");

  SessionFlags session;
  auto* session_cmd = app.add_subcommand("session", "run one session and print its transcript");
  add_common(session_cmd, session.common, false);
  add_security(session_cmd, session.security);
  add_errors(session_cmd, session.errors);
  add_mc(session_cmd, session.mc);
  session_cmd->add_option("--alpha0", session.alpha0, "seller's retained fraction, in (0, 1]");
  session_cmd->add_option("--omega", session.omega, "seller's value, in [0, 1)");
  session_cmd->add_option("--phi", session.phi, "security cap (default 1, or from --k/--p/...)");
  session_cmd->add_option("--eb-draw", session.eb_draw, "fixed buyer payment error");
  session_cmd->add_option("--es-draw", session.es_draw, "fixed seller underdisclosure");
  session_cmd->add_option("--agent-cap", session.agent_cap, "seller's own cap on her agent");
  session_cmd->add_option("--timeout-at", session.timeout_at, "exit instead of entering this state");
  session_cmd->add_option("--view", session.view, "all, buyer, seller or enclave events");

  McCommandFlags mc;
  auto* mc_cmd = app.add_subcommand("mc", "Monte Carlo payoff next to the quadrature and closed form");
  add_common(mc_cmd, mc.common, true);
  add_market(mc_cmd, mc.market);
  add_errors(mc_cmd, mc.errors);
  add_mc(mc_cmd, mc.mc);

  SweepFlags sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "parameter sweep as CSV rows");
  add_common(sweep_cmd, sweep.common, true);
  add_market(sweep_cmd, sweep.market);
  add_errors(sweep_cmd, sweep.errors);
  add_security(sweep_cmd, sweep.security);
  add_mc(sweep_cmd, sweep.mc);
  sweep_cmd->add_option("--param", sweep.parameter, "e_b, theta, alpha0, d, k, p, gamma or C")
      ->required();
  sweep_cmd->add_option("--from", sweep.from, "first grid value")->required();
  sweep_cmd->add_option("--to", sweep.to, "last grid value")->required();
  sweep_cmd->add_option("--steps", sweep.steps, "grid points (>= 2)")->required();
  sweep_cmd->add_flag("--cap-variants", sweep.cap_variants, "rows for cap on and cap off");
  sweep_cmd->add_flag("--tie-eb", sweep.tie_e_b, "set E_b = 2 theta at every grid point");

  VerifyFlags verify;
  auto* verify_cmd = app.add_subcommand("verify", "run the acceptance suite");
  add_common(verify_cmd, verify.common, false);
  add_mc(verify_cmd, verify.mc);
  verify_cmd->add_option("--only", verify.only, "criterion ids to run")->delimiter(',');

  ReportFlags report;
  auto* report_cmd = app.add_subcommand("report", "summarize sweep CSV files");
  report_cmd->add_option("--format", report.format, "csv (default) or json-lines");
  report_cmd->add_option("--output", report.output, "write to this file instead of stdout");
  report_cmd->add_option("files", report.files, "CSV files written by sweep")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (scope_cmd->parsed()) return cmd_scope(scope, out);
    if (session_cmd->parsed()) return cmd_session(session, out, env);
    if (mc_cmd->parsed()) return cmd_mc(mc, out, env);
    if (sweep_cmd->parsed()) return cmd_sweep(sweep, out, env);
    if (verify_cmd->parsed()) return cmd_verify(verify, out, env);
    if (report_cmd->parsed()) return cmd_report(report, out);
  } catch (const std::exception& e) {
    // Invalid flags, config files and parameter domains all land here.
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace holdup::app
