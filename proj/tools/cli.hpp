#pragma once

#include <iosfwd>

namespace linecong::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsageError = 2,
  kMathError = 3,
};

/// Runs the command line; writes results to `out` (unless --out is given)
/// and diagnostics to `err`. Returns the process exit status.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace linecong::cli
