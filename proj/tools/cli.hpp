#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ymvac::cli {

enum ExitCode : int { kOk = 0, kValidation = 2, kConsistency = 3 };

/// Runs one subcommand. args excludes the program name. The report (or an
/// error record) goes to `out` unless --out names a file; a one-line error
/// summary goes to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ymvac::cli
