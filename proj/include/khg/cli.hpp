#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace khg::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // domain or verification failure
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (args[0] is the program name). Regular
/// output goes to `out`, diagnostics to `err`. Returns the exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace khg::cli
