#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sq::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 2;
inline constexpr int exit_parse = 3;
inline constexpr int exit_validation = 4;

/// Runs one invocation. `args` excludes the program name. Normal output goes
/// to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sq::cli
