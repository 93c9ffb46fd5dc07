#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace carleman::cli {

/// Stable exit-code contract.
enum ExitCode : int {
    kOk = 0,           // every check in the run passed
    kCheckFailed = 1,  // a mathematical assertion failed
    kUsage = 2,        // bad flags or configuration
};

/// Runs one subcommand. `args[0]` is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace carleman::cli
