#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace renyi::cli {

inline constexpr const char* kVersion = "0.1.0";

/// Process exit codes.
enum ExitCode : int { kSuccess = 0, kUsageError = 2, kDomainError = 3 };

/// Runs one invocation. `args` excludes the program name. The JSON report
/// goes to `out`; diagnostics and the optional human summary go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace renyi::cli
