#pragma once

#include <iosfwd>

namespace degen::io {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,          // bad flags, unreadable files
  kValidation = 2,     // descriptor rejected; stderr names the field path
  kInconsistency = 3,  // applicable formulas disagree
  kLintViolation = 4,  // --strict and a lint reported a violation
};

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace degen::io
