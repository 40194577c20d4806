#include "holdup/app/run_config.hpp"

#include <cmath>
#include <fstream>
#include <initializer_list>
#include <sstream>

#include <json.hpp>

#include "holdup/error.hpp"

namespace holdup::app {

namespace {

using nlohmann::json;

void fail(const std::string& what) { throw ConfigError("config: " + what); }

void only_keys(const json& obj, std::string_view where, std::initializer_list<std::string_view> keys) {
  if (!obj.is_object()) fail(std::string(where) + " must be an object");
  for (const auto& [key, _] : obj.items()) {
    bool known = false;
    for (std::string_view k : keys) known = known || key == k;
    if (!known) fail("unknown key '" + std::string(where) + "." + key + "'");
  }
}

std::optional<double> number(const json& obj, const char* key, std::string_view where) {
  if (!obj.contains(key)) return std::nullopt;
  const json& v = obj.at(key);
  if (!v.is_number()) fail(std::string(where) + "." + key + " must be a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) fail(std::string(where) + "." + key + " must be finite");
  return x;
}

std::optional<double> nonnegative(const json& obj, const char* key, std::string_view where) {
  auto x = number(obj, key, where);
  if (x && *x < 0.0) fail(std::string(where) + "." + key + " must be nonnegative");
  return x;
}

template <class Int>
std::optional<Int> integer(const json& obj, const char* key, std::string_view where, Int least) {
  if (!obj.contains(key)) return std::nullopt;
  const json& v = obj.at(key);
  if (!v.is_number_integer()) fail(std::string(where) + "." + key + " must be an integer");
  if (v.is_number_unsigned() ? v.get<std::uint64_t>() < static_cast<std::uint64_t>(least)
                             : v.get<std::int64_t>() < static_cast<std::int64_t>(least)) {
    fail(std::string(where) + "." + key + " must be at least " + std::to_string(least));
  }
  return v.get<Int>();
}

}  // namespace

RunConfig parse_run_config(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(std::string("malformed JSON: ") + e.what());
  }
  only_keys(doc, "config", {"scenario", "market", "security", "errors", "mc", "output"});

  RunConfig cfg;
  if (doc.contains("scenario")) {
    if (!doc["scenario"].is_string()) fail("scenario must be a string");
    cfg.scenario = doc["scenario"].get<std::string>();
  }
  if (doc.contains("market")) {
    const json& m = doc["market"];
    only_keys(m, "market", {"alpha0", "theta"});
    cfg.alpha0 = number(m, "alpha0", "market");
    cfg.theta = number(m, "theta", "market");
    if (cfg.alpha0 && cfg.theta) fail("market takes alpha0 or theta, not both");
    if (cfg.alpha0 && !(*cfg.alpha0 > 0.0 && *cfg.alpha0 <= 1.0)) fail("market.alpha0 must lie in (0, 1]");
    if (cfg.theta && !(*cfg.theta > 0.0 && *cfg.theta < 1.0)) fail("market.theta must lie in (0, 1)");
  }
  if (doc.contains("security")) {
    const json& s = doc["security"];
    only_keys(s, "security", {"k", "n", "p", "gamma", "C", "c"});
    cfg.k = integer<std::int64_t>(s, "k", "security", 1);
    cfg.n = integer<std::int64_t>(s, "n", "security", 1);
    cfg.p = number(s, "p", "security");
    cfg.gamma = number(s, "gamma", "security");
    cfg.penalty = nonnegative(s, "C", "security");
    cfg.fixed_cost = nonnegative(s, "c", "security");
    if (cfg.p && !(*cfg.p > 0.0 && *cfg.p < 1.0)) fail("security.p must lie in (0, 1)");
    if (cfg.gamma && *cfg.gamma < 1.0) fail("security.gamma must be at least 1");
    if (cfg.k && cfg.n && *cfg.n < *cfg.k) fail("security.n must be at least k");
  }
  if (doc.contains("errors")) {
    const json& e = doc["errors"];
    only_keys(e, "errors", {"e_b", "e_s", "buffer"});
    cfg.e_b = nonnegative(e, "e_b", "errors");
    cfg.e_s = nonnegative(e, "e_s", "errors");
    cfg.buffer = nonnegative(e, "buffer", "errors");
  }
  if (doc.contains("mc")) {
    const json& m = doc["mc"];
    only_keys(m, "mc", {"samples", "seed"});
    cfg.samples = integer<std::uint64_t>(m, "samples", "mc", 1);
    cfg.seed = integer<std::uint64_t>(m, "seed", "mc", 0);
  }
  if (doc.contains("output")) {
    const json& o = doc["output"];
    only_keys(o, "output", {"format", "path"});
    if (o.contains("format")) {
      if (!o["format"].is_string()) fail("output.format must be a string");
      const auto name = o["format"].get<std::string>();
      if (name != "csv" && name != "json-lines") fail("output.format must be csv or json-lines");
      cfg.format = parse_format(name);
    }
    if (o.contains("path")) {
      if (!o["path"].is_string()) fail("output.path must be a string");
      cfg.path = o["path"].get<std::string>();
    }
  }
  return cfg;
}

RunConfig load_run_config(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) fail("cannot read '" + file.string() + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_run_config(text.str());
}

}  // namespace holdup::app
