#pragma once

#include <iosfwd>

namespace hypermat::cli {

enum ExitCode : int {
  kOk = 0,
  kUsageError = 1,
  kInfeasible = 2,
  kOracleMismatch = 3,
};

/// Runs the command line and returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace hypermat::cli
