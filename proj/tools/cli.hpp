#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vecinv::cli {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitPrecondition = 3;
inline constexpr int kExitNotIntegrable = 4;
inline constexpr int kExitConstructionFailed = 5;

// Runs one invocation; `args` excludes the program name. Results go to
// `out`, diagnostics in text mode to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vecinv::cli
