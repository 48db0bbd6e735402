#pragma once

#include <ostream>

namespace vergraph::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    kOk = 0,
    kValidationError = 1,
    kBudgetError = 2,
    kCheckFailed = 3,
};

/// Parses argv, runs one verb and returns its exit code. Diagnostics go to
/// `err`; reports not redirected by --out go to `out`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace vergraph::cli
