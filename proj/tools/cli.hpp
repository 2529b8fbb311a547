#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace kummer::cli {

enum Exit {
  kOk = 0,
  kVerifyFailed = 1,
  kNotInA = 2,
  kParseError = 3,
  kIterationCap = 4,
  kMisconfigured = 5,
};

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kummer::cli
