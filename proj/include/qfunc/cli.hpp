#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qfunc::cli {

/// Exit codes, a stable contract for scripting.
inline constexpr int kExitPass = 0;
inline constexpr int kExitVerificationFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitMathError = 3;

/// Runs one invocation. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qfunc::cli
