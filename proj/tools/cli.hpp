#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace monideal::cli {

/// Process exit codes. Everything at or above `usage_error` means no verdict.
enum ExitCode : int {
  verified = 0,
  refuted = 1,
  inapplicable = 2,
  timeout = 3,
  usage_error = 4,
  internal_error = 5,
};

/// Runs one command; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace monideal::cli
