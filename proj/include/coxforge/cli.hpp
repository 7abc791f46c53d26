#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace coxforge {

inline constexpr int kExitOk = 0;
inline constexpr int kExitPrecondition = 1;
inline constexpr int kExitCap = 2;
inline constexpr int kExitUsage = 64;

std::string usage();

/// Runs one verb. `args` excludes the program name.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace coxforge
