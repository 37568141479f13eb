#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tinv::cli {

// Exit codes of `check`; every other command uses 0 for success, 1 for a
// negative verdict and 3 for errors.
inline constexpr int kTerminating = 0;
inline constexpr int kInvalidInvariant = 1;
inline constexpr int kNonterminating = 2;
inline constexpr int kError = 3;

/// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tinv::cli
