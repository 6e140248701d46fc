#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace adtrace {

enum ExitCode : int {
  kExitOk = 0,
  kExitFindings = 1,
  kExitParse = 2,
  kExitUsage = 3,
};

/// Runs one `adtrace` invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace adtrace
