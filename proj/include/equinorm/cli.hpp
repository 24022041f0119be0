#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace equinorm::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command. `args` excludes the program name. The payload goes to
/// `out`, diagnostics to `err`; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace equinorm::cli
