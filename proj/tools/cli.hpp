#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace contagion::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kUsageError = 2,
  kCapExceeded = 3,
};

/// Entry point of the `contagion` tool. args[0] is the program name.
/// Reports go to `out`, diagnostics to `err`; the return value is the
/// process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace contagion::cli
