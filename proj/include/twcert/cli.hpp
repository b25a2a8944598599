#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace twcert {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    exit_ok = 0,
    exit_violation = 1,
    exit_usage = 2,
    exit_exhausted = 3,
};

/// Runs the `twcert` command line (arguments without the program name).
/// Reports go to `out` as JSON, diagnostics to `err`.
int run_cli(const std::vector<std::string> & args, std::ostream & out, std::ostream & err);

} // namespace twcert
