#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace alphabwm {

// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;   // unreadable, malformed or invalid input
inline constexpr int kExitSolver = 3;  // numerical failure

// args[0] is the program name. Output goes to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace alphabwm
