#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rol::cli {

enum ExitCode : int {
    kOk = 0,
    kFailed = 1,        // command ran but the requested class / fixtures did not hold
    kInfeasible = 2,
    kIoError = 3,
    kInconsistent = 4,
};

/// Runs the command line `args` (without the program name), writing the
/// result document to `out` and diagnostics to `err`. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace rol::cli
