#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tourlab::cli {

enum ExitCode : int {
  kOk = 0,
  kDomainError = 1,
  kUsageError = 2,
  kVerificationFailure = 3,
};

/// Runs one command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tourlab::cli
