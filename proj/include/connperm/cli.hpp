#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace connperm {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

/// Polynomial and series commands refuse larger sizes unless --limit is raised.
inline constexpr int kDefaultPolyLimit = 64;

/// Runs the command line `args` (without the program name). Results go to
/// `out`, diagnostics to `err`. Returns 0 on success, 1 on a domain error,
/// 2 on a usage or parse error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace connperm
