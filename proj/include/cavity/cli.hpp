#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cavity::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNumeric = 1;
inline constexpr int kExitUsage = 2;

/// Runs one subcommand. `args` excludes the program name. Output goes to
/// `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// 15 significant digits, shortest of fixed/scientific, '.' separator.
std::string format_number(double value);

}  // namespace cavity::cli
