#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gclab {

// Exit codes of the gclab command line.
enum ExitCode : int {
  kExitOk = 0,
  kExitFindings = 1,  // unexplained audit mismatch or violated bound
  kExitUsage = 2,     // bad arguments, unreadable input, domain error
  kExitBudget = 3,    // exact solver node budget exhausted
};

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gclab
