#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace csfkit::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;  // mismatch, or not positive
inline constexpr int kExitCapacity = 2;
inline constexpr int kExitUsage = 64;

/// Runs one command; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace csfkit::cli
