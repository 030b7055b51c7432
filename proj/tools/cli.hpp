#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace krull::cli {

/// Exit codes: everything checked holds / a check failed / bad invocation.
enum ExitCode { kOk = 0, kViolation = 1, kUsage = 2 };

/// Runs one command line (args[0] is the program name). Writes a single JSON
/// document to `out` and usage messages to `err`; returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace krull::cli
