// Command-line surface.  Exit codes: 0 success, 1 invalid input,
// 2 internal verification failure (including Monte-Carlo disagreement
// under --verify).

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fanopoly {

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fanopoly
