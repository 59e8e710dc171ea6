#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace pellucas::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsage = 2;

/// Runs one CLI invocation. args[0] is the program name. CSV goes to out,
/// diagnostics to err. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace pellucas::cli
