#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mixorient {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (without the program name). Graph input
/// named "-" or omitted comes from `in`. Returns the process exit code:
/// 0 success, 1 domain failure, 2 usage or parse error.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace mixorient
