#pragma once

#include <iosfwd>

namespace wehrl::cli {

/// Exit statuses of the command-line front end.
enum ExitCode : int {
  kOk = 0,
  kUsage = 1,      // bad flags, unreadable or malformed input
  kNumerical = 2,  // numerical failure or a verification contract exceeded
  kViolation = 3,  // a scan margin stayed below -tolerance after refinement
};

/// Runs the CLI with the given arguments (argv[0] is the program name).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace wehrl::cli
