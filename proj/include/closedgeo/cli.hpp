#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace closedgeo::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_survivors = 1;
inline constexpr int exit_input_error = 2;

/// Parses `args` (without the program name), runs the subcommand and writes
/// the report to `out`, diagnostics to `err`. Returns the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace closedgeo::cli
