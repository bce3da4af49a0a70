#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lgc::cli {

inline constexpr int kOk = 0;
inline constexpr int kInputError = 1;
inline constexpr int kInvariantViolation = 2;

/// Runs one subcommand. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lgc::cli
