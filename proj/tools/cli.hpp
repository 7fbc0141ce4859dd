#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fsq::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 1,
  kInconclusive = 2,
  kResourceCap = 3,
  kCheckFailed = 4,
};

/// Runs the command line (without the program name). Reports go to `out`,
/// diagnostics to `err`; `in` backs the "-" input path.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace fsq::cli
