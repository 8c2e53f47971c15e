#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qutrit::cli {

enum ExitCode : int {
  kSuccess = 0,
  kBadInput = 1,
  kInternalError = 2,
};

/// Runs the command line `args` (args[0] is the program name). Output goes to
/// `out` unless --output names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qutrit::cli
