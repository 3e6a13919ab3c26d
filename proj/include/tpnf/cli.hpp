#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tpnf {

/// Exit codes of the command line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitInputError = 2;

/// Runs one subcommand (args exclude the program name). JSON results go to
/// `out` (or to --output), diagnostics as a JSON error object to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tpnf
