#pragma once

#include <string>
#include <vector>

namespace bertrand::cli {

// Exit codes.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitIndeterminate = 2;
inline constexpr int kExitUsage = 3;

/// Parses argv (argv[0] is the program name), runs one subcommand and
/// returns its exit code.
int run(int argc, const char* const* argv);
int run(const std::vector<std::string>& args);

}  // namespace bertrand::cli
