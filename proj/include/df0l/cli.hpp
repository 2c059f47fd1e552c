#pragma once

#include <ostream>

namespace df0l::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 2,
  kPreconditionError = 3,
};

/// Parses argv, runs one command and writes its report. Returns the process
/// exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace df0l::cli
