#pragma once

// Subcommand dispatch for the holdup command-line tool.
//
//   scope    security scope calculator
//   session  one mediated session with its transcript
//   mc       Monte Carlo buyer (and seller) payoff next to the oracles
//   sweep    parameter sweep as plot-ready rows
//   verify   the acceptance suite
//   report   summary of earlier sweep CSV files
//
// Exit codes: 0 success, 1 failed criterion, 2 usage or configuration error.

#include <ostream>
#include <string>
#include <vector>

namespace holdup::app {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

struct CliEnv {
  unsigned workers = 0;  // 0: HOLDUP_WORKERS, else all hardware threads
};

/// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            const CliEnv& env = {});

}  // namespace holdup::app
