#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wreathlab {

/// Runs the command-line interface on the given arguments (without argv[0]).
/// Exit codes: 0 success, 1 check failure, 2 usage error, 3 budget or cap
/// exceeded.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wreathlab
