#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qheat::cli {

/// Exit codes of the `qheat` tool.
enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1, ///< validate: at least one check failed
  kUsage = 2,       ///< invalid flags or cycle specification
  kRegime = 3,      ///< GUP validity gate violated or degenerate cycle
};

/// Runs one invocation. `args` excludes the program name. Reports go to
/// `out`, one-line diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace qheat::cli
