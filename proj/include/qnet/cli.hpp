#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qnet {

enum ExitCode : int {
  kExitOk = 0,
  kExitValidation = 1,
  kExitNumerical = 2,
  kExitIo = 3,
};

/// Entry point of the `qnet` command line; `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qnet
