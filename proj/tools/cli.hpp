#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace blockset::cli {

enum ExitCode : int {
  kSuccess = 0,
  kNotBlocking = 1,
  kUsageError = 2,
  kBudgetExceeded = 3,
};

/// Runs one CLI invocation; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace blockset::cli
