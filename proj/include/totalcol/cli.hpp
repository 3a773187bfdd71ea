#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace totalcol::cli {

/// Process exit codes. Stable; documented in the README.
enum ExitCode : int {
    kOk = 0,
    kInvalidColouring = 1,
    kParseError = 2,
    kPreconditionFailed = 3,
    kOpenProblem = 4,
    kTimedOut = 5,
};

/// Runs one invocation. `args` excludes the program name. Documents go to
/// `out` unless -o names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace totalcol::cli
