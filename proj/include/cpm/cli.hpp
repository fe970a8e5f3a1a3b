#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cpm {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitInput = 2,
  kExitResourceLimit = 3,
};

// Runs the command line `args` (args[0] is the program name) and returns
// the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cpm
