#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace besselsum::cli {

enum ExitCode : int {
  kExitPass = 0,
  kExitFail = 1,
  kExitInvalidConfig = 2,
  kExitEvaluationError = 3,
};

/// Runs the command line `args` (without the program name). Report records
/// go to `out` unless an output path is configured; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace besselsum::cli
