#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pentiso {

// Exit codes of the command-line front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

// Runs the command line (without the program name). Never throws.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pentiso
