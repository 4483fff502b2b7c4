#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tdp::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitViolation = 2;

/// Runs one command line (without the program name). Results go to out,
/// diagnostics to err. Returns 0 on success, 1 on a usage or input error and
/// 2 when a verified invariant fails.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tdp::cli
