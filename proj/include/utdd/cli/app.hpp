#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace utdd::cli {

/// Exit codes: 0 success / no drift, 1 drift detected (detect only), 2 any error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDrift = 1;
inline constexpr int kExitError = 2;

/// Runs the command line `args` (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace utdd::cli
