#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace braidforge::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitBudget = 2;

/// Runs one command line (without the program name). The report goes to
/// `out` as text, or as JSON with --json; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace braidforge::cli
