#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace chainops {

enum ExitCode : int { kExitOk = 0, kExitMismatch = 1, kExitUsage = 2, kExitResource = 3 };

/// Runs the command line `args` (without the program name). Never throws.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chainops
