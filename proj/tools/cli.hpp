#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace alcove {

// Runs the command line with the given arguments (without the program name) and returns
// the exit status: 0 when every check passed, 1 when a check failed, 2 on a usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace alcove
