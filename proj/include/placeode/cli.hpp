#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace placeode {

/// Runs the command line front end; args exclude the program name. Returns the exit code:
/// 0 success, 2 invalid input, 3 resource limit, 1 anything else.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace placeode
