#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hopftree {

/// Exit statuses of the command-line tool.
enum ExitCode { kExitOk = 0, kExitVerifyFailed = 1, kExitUsage = 2 };

/// Runs the tool on `args` (without the program name). Normal output goes to
/// `out`, cost estimates and diagnostics to `err`. Lines to convert are read
/// from `in` when the convert subcommand gets no inputs.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            std::istream* in = nullptr);

}  // namespace hopftree
