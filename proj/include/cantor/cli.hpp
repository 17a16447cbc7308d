#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cantor::cli {

enum ExitCode : int {
  kOk = 0,
  kNegative = 1,
  kUsage = 2,
  kUndetermined = 3,
  kLimit = 4,
};

/// Runs one command; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cantor::cli
