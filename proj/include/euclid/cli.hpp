#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace euclid::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

/// Entry point behind the euclid tool; args excludes the program name.
/// Exit 0 on success, 1 when a mathematical precondition fails, 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace euclid::cli
