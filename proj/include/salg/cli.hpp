#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace salg {

/// Exit codes: 0 success, 1 a predicate came out false, 2 input error.
inline constexpr int kExitFalse = 1;
inline constexpr int kExitInput = 2;

/// Runs one `salg` command; `args` excludes the program name.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace salg
