#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace congr::cli {

enum ExitCode : int {
  kAllPassed = 0,
  kCaseFailures = 1,
  kUsageError = 2,
  kPreconditionError = 3,
};

/// Runs one command; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace congr::cli
