#ifndef TORUSWEYL_CLI_APP_HPP
#define TORUSWEYL_CLI_APP_HPP

#include <ostream>
#include <string>
#include <vector>

namespace torusweyl::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,  // I/O failure or a failed self-test
  kParseError = 2,
  kDimensionError = 3,
  kDomainError = 4,
};

/// Runs the command line `args` (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace torusweyl::cli

#endif  // TORUSWEYL_CLI_APP_HPP
