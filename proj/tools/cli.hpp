#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace relabel::cli {

/// Exit codes.
inline constexpr int kOk = 0;        // success, or the answer is yes
inline constexpr int kNo = 1;        // the answer is no / unsolvable
inline constexpr int kUsage = 2;     // bad arguments or input files
inline constexpr int kCapacity = 3;  // an exact search would exceed the state limit

/// Runs one command line (without the program name). JSON goes to `out`, messages to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace relabel::cli
