#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace kbal {

// Exit codes of the command-line driver.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

// Runs one command line (args excludes the program name) and writes the
// report to out, diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kbal
