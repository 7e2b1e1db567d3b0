#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mder::cli {

// Exit statuses of the command-line tool.
inline constexpr int exit_ok = 0;
inline constexpr int exit_failure = 1; // verification or guess failed
inline constexpr int exit_usage = 2;   // usage, parse or schema error

/// Runs the tool on args (without the program name). Normal output goes to
/// out unless --out names a file; diagnostics go to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace mder::cli
