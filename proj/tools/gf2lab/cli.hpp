#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gf2lab::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kFailed = 1; // a verification failed or a counterexample was found
inline constexpr int kUsage = 2;  // bad flags, bad input files, out-of-range parameters

/// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace gf2lab::cli
