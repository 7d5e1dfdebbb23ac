#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sheafrig {

// Exit codes: 0 success, 2 precondition/input error, 1 internal failure.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace sheafrig
