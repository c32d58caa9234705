#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace polytime {

// Runs one polyck command; args excludes the program name.
// Exit codes: 0 success, 1 user/input error, 2 dynamic bound violation.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace polytime
