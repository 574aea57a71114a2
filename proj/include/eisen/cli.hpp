#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace eisen::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kNoRepresentation = 2,
  kConstructionFailed = 3,
};

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eisen::cli
