#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace trilights::cli {

enum ExitCode : int {
  kOk = 0,
  kUnsolvable = 1,
  kUsage = 2,
  kVerificationFailure = 3,
};

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace trilights::cli
