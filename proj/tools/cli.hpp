#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fthresh::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInconclusive = 3;

// One invocation, without the program name. The report goes to `out` unless
// --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fthresh::cli
