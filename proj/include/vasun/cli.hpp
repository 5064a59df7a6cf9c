#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vasun::cli {

/// Exit codes: 0 decided, 1 input error, 2 unknown or budget exhausted.
enum ExitCode { kDecided = 0, kInputError = 1, kUnknown = 2 };

/// Runs one command; args excludes the program name. Reports go to out as
/// one JSON object per line, diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vasun::cli
