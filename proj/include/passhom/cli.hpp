#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace passhom {

// Exit codes: 0 success, 2 invalid input, 3 negative decision
// (not equivalent / replay mismatch), 1 internal error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace passhom
