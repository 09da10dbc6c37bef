#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gpencil::cli {

enum ExitCode : int {
  kOk = 0,
  kDomainError = 1,          // invalid set, matrix not positive definite, ...
  kUsageError = 2,           // malformed arguments
  kVerificationFailure = 3,  // interlacing violated, conjecture disagreement, failed criterion
};

/// Runs one command line (without the program name), writing records to
/// `out` and diagnostics to `err`. Returns the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gpencil::cli
