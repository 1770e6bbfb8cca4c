#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace covermip {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInfeasible = 2;
/// `check` found a certified ratio that does not hold.
inline constexpr int kExitCheckFailed = 3;

/// Runs the command line `args` (without the program name). Reports and
/// summaries go to `out`, diagnostics to `err`. Returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace covermip
