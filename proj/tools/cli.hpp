#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pumpkit::cli {

/// Process exit codes.
enum ExitCode : int {
    kSuccess = 0,       ///< accepted / verified
    kRejected = 1,      ///< not accepted, or verification failed
    kUsage = 2,         ///< usage, parse or validation error
    kLimits = 3,        ///< search limits exceeded
    kNoWitness = 4,     ///< best-effort extraction found no witness
};

/// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace pumpkit::cli
