#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace supchar::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kBound = 2,
  kVerification = 3,
};

/// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace supchar::cli
