#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace shadowlab::cli {

/// Exit codes of `run`.
enum ExitCode : int {
  kOk = 0,
  kInternalError = 1,
  kUsageError = 2,  // bad flags and violated preconditions
};

/// Runs one command line (without the program name). The JSON report goes
/// to `out`, diagnostics and usage text to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace shadowlab::cli
