#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace frobpow::cli {

/// Exit codes of run().
enum ExitCode : int {
  kOk = 0,
  /// A verification (compare, verify) found a disagreement.
  kMismatch = 1,
  kValidation = 2,
  kResource = 3,
  kInternal = 4,
};

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace frobpow::cli
