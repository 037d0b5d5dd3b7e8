#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dqeig::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitNoConvergence = 2;

/// Entry point of the `dqeig` executable. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dqeig::cli
