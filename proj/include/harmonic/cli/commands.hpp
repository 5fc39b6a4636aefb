#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace harmonic::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitUndecided = 3;

/// Runs the command line `harmonic <args...>` (args exclude the program name),
/// writing results to `out` and diagnostics to `err`. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace harmonic::cli
