#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rpseq {

/// Exit codes of the rpseq tool.
enum ExitCode : int {
  kExitAffirmative = 0,  // common zero found, command succeeded
  kExitNegative = 1,     // not a common zero, or a golden example failed
  kExitUsage = 2,        // bad flags, unreadable or malformed input
};

/// Runs the command line `args` (args[0] is the program name), writing
/// reports to `out` (or --out) and diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rpseq
