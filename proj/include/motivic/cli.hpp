#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace motivic {

/// Exit codes of the command-line driver.
inline constexpr int kExitOk = 0;           // success
inline constexpr int kExitUsage = 1;        // bad flags/arguments/input values
inline constexpr int kExitParse = 2;        // bad expression or script text
inline constexpr int kExitComputation = 3;  // overflow, budget, not countable, bad fit
inline constexpr int kExitMismatch = 4;     // oracle disagrees with the normalizer

/// Runs the driver on argv-style arguments (without the program name).
/// Results go to `out`, diagnostics to `err`; returns the exit code. The
/// environment variable MOTIVIC_BUDGET provides the default for --budget.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace motivic
