#ifndef SPLITCUT_TOOLS_CLI_HPP
#define SPLITCUT_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace splitcut::cli {

inline constexpr int kExitYes = 0;
inline constexpr int kExitNo = 1;
inline constexpr int kExitError = 2;

/// Runs the command line `args` (without the program name). Diagnostics go to `err`.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace splitcut::cli

#endif // SPLITCUT_TOOLS_CLI_HPP
