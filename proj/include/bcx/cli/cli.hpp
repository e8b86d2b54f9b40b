#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bcx::cli {

enum ExitCode : int {
  kOk = 0,
  kMismatch = 1,  // a verification found a score outside tolerance
  kUsage = 2,
  kInput = 3,
};

/// Runs the `bcx` command line. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bcx::cli
