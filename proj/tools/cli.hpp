#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace aperiodic::cli {

enum ExitCode : int { kOk = 0, kValidation = 1, kAudit = 2 };

// Runs one subcommand. Reports go to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace aperiodic::cli
