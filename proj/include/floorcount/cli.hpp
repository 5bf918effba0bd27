#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace floorcount {

inline constexpr int exit_ok = 0;
inline constexpr int exit_failure = 1;
inline constexpr int exit_invalid_input = 2;
inline constexpr int exit_consistency = 3;

/// Runs the `floorcount` command line; `args` excludes the program name.
///
/// Exit codes: 0 on success, 2 on invalid input (bad polygon, parameter out
/// of range, malformed file, failed validation), 3 when an internal
/// consistency check fails (inexact orbit count, odd parity, a failed
/// oracle comparison), 1 on other errors such as IO failures.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace floorcount
