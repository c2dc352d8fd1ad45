#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dsform::cli {

/// Exit statuses shared by every subcommand.
enum ExitStatus : int {
    kAllPassed = 0,
    kCheckFailed = 1,
    kUsageError = 2,
};

/// Runs the command line `args` (without the program name), writing the report
/// to `out` and diagnostics to `err`. Returns the process exit status.
int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace dsform::cli
