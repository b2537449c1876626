#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace latrec::cli {

enum ExitCode : int {
  kOk = 0,
  kInternal = 1,
  kBadArgs = 2,
  kRetryLimit = 3,
  kConditionFails = 4,
};

/// Runs the command line front-end; argv[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace latrec::cli
