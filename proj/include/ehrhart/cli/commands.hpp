#pragma once

#include <ostream>

#include "ehrhart/error.hpp"

namespace ehrhart::cli {

enum ExitCode : int {
  kOk = 0,
  kPredictionFailed = 1,
  kUsage = 2,
  kMathDomain = 3,
  kRouteMismatch = 4,
  kFamilyDisagreement = 5,
  kTheoremViolated = 6,
};

/// Exit status reported for a library error of the given class.
int exit_code_for(ErrorCode code);

/// Entry point of the `ehrhart` tool; argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ehrhart::cli
