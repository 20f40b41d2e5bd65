#pragma once

#include <ostream>

namespace gaussrom {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitInvalid = 1, kExitVerificationFailed = 2 };

/// Parses and dispatches one command line. Reports go to `out`, diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gaussrom
