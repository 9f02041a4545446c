#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qdim::cli {

// Exit codes shared by every command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;  // verification failure or inconclusive
inline constexpr int kExitInput = 2;   // input or resource error

/// Runs the command line `args` (without the program name), writing normal
/// output to `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qdim::cli
