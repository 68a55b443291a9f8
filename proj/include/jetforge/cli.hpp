#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace jetforge {

// Exit codes shared by the CLI surface. Scripts should rely on these only.
//   smooth:   0 = Smooth, 1 = Singular, 2 = Inconclusive
//   flatness: 0 = no witness found, 1 = non-flatness certified
//   any:      3 = error (bad input, refusal)
inline constexpr int kExitError = 3;

// Runs one `jetforge` invocation; args exclude the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace jetforge
