#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hamfix {

// Exit codes: 0 pass, 1 check failure, 2 usage error or malformed input.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// argv without the program name.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hamfix
