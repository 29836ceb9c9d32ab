#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hypersched::cli {

inline constexpr const char* kVersion = "0.1.0";

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kOk = 0,
  kNegative = 1,       // infeasible, fails, stuck, not a star
  kInputError = 2,     // parse or validation failure
  kLimitExceeded = 3,  // size limit
  kInternalError = 4,  // beta/sigma disagreement
};

/// Runs the command line `args` (args[0] is the program name), writing the
/// report to `out` and diagnostics to `err`. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hypersched::cli
