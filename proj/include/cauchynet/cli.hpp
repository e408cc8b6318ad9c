#pragma once

#include <exception>
#include <ostream>
#include <string>
#include <vector>

namespace cauchynet::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kValidation = 2,
  kNumerical = 3,
  kIo = 4,
};

/// Maps an exception onto the process exit code.
int exit_code_for(const std::exception& e);

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, char** argv);

}  // namespace cauchynet::cli
