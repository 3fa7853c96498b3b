#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tccss {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Entry point of the `tccss` executable. args[0] is the program name.
/// Returns 0 on success, 1 when a verification threshold fails (or a check
/// aborts), 2 for usage, configuration and I/O errors. Never throws.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "a:b:n" -> n points from a to b inclusive (n >= 1; n == 1 gives a).
std::vector<double> parse_sweep(const std::string& text);

}  // namespace tccss
