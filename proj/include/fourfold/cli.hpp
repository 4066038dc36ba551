#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fourfold {

// Command-line front end. args excludes the program name. Returns the process
// exit code: 0 success, 2 validation failure, 3 mathematical-check failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fourfold
