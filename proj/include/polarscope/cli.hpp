#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace polarscope::cli {

/// Exit codes.
inline constexpr int kPass = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kInputError = 2;

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polarscope::cli
