#pragma once

// Experiment configuration file: one JSON document mirroring the flags.
//
//   {
//     "scenario": "figure-sweep",
//     "market":   {"alpha0": 0.2}            or {"theta": 0.6},
//     "security": {"k": 3, "n": 5, "p": 0.005, "gamma": 2, "C": 1, "c": 0},
//     "errors":   {"e_b": 1.2, "e_s": 0, "buffer": 0},
//     "mc":       {"samples": 1000000, "seed": 1},
//     "output":   {"format": "csv", "path": "out.csv"}
//   }
//
// Every section and key is optional; unknown keys are rejected. Command-line
// flags override file values.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "holdup/app/format.hpp"

namespace holdup::app {

struct RunConfig {
  std::string scenario;
  std::optional<double> alpha0;
  std::optional<double> theta;
  std::optional<std::int64_t> k;
  std::optional<std::int64_t> n;
  std::optional<double> p;
  std::optional<double> gamma;
  std::optional<double> penalty;
  std::optional<double> fixed_cost;
  std::optional<double> e_b;
  std::optional<double> e_s;
  std::optional<double> buffer;
  std::optional<std::uint64_t> samples;
  std::optional<std::uint64_t> seed;
  std::optional<OutputFormat> format;
  std::optional<std::string> path;
};

/// Throws ConfigError on malformed JSON, unknown keys, wrong types, or values
/// outside their ranges.
RunConfig parse_run_config(std::string_view text);
RunConfig load_run_config(const std::filesystem::path& file);

}  // namespace holdup::app
