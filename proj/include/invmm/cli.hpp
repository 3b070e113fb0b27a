#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace invmm {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitCheckFailed = 1, kExitUsage = 2, kExitInput = 3 };

/// Runs one command line (without the program name). Errors go to `err` as `error: <kind>: <message>`.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace invmm
