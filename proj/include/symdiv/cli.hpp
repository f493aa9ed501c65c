#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace symdiv::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kOk = 0,
  kFailed = 1,    ///< audit found violations, or a certificate did not verify
  kBadInput = 2,  ///< argument, parse or validation error
};

/// Runs the command line `args` (without the program name), writing normal
/// output to `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace symdiv::cli
