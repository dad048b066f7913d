#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace solenoid::cli {

enum ExitCode : int {
  kOk = 0,
  kBadArguments = 2,
  kPrecondition = 3,
  kResourceLimit = 4,
};

/// Runs one command line (args exclude the program name). Reports go to
/// `out` unless --out names a file; diagnostics and the zeta comparison
/// table go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace solenoid::cli
