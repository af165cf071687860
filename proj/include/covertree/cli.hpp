#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace covertree {

/// Exit codes: 0 success, 1 solved and infeasible (or a bench disagreement),
/// 2 usage or input error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInfeasible = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics and usage text to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace covertree
