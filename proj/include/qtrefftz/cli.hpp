#pragma once

#include <iosfwd>

namespace qt::cli {

enum ExitCode : int {
  kOk = 0,
  kMalformedInput = 1,
  kDegenerateOrder = 2,
  kSolveCheckFailed = 3,
  kVerifyFailed = 4,
};

/// Entry point of the qtrefftz tool. Results go to files or `out`;
/// diagnostics (gated by QT_LOG) and errors go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qt::cli
