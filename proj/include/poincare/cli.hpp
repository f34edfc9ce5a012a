#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace poincare::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_failure = 1, // verification or integrity failure
    exit_usage = 2,
};

// Runs the command line `args` (args[0] is the program name). Reports go to
// `out` (or to the --output file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace poincare::cli
