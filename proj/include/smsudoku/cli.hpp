#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace smsudoku::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsage = 1,
  kMalformed = 2,
  kInconsistent = 3,
  kVerifyFailed = 4,
  kMultipleSolutions = 5,
  kNoSolution = 6,
};

// args excludes the program name. Errors go to `err` as one line:
//   error: <usage|malformed|inconsistent|too-large>: <message>
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace smsudoku::cli
