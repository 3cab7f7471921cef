#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lowlying::cli {

enum ExitCode : int {
  kOk = 0,
  kUnknownCommand = 1,
  kConfigError = 2,
  kCapExceeded = 3,
  kInternalError = 4,
};

/// Runs one subcommand. args excludes the program name. Artifacts go to the
/// --output path (stdout when "-"), diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lowlying::cli
