#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace spa {

// Runs one CLI invocation. `args` excludes the program name. Exit codes:
// 0 success, 1 infeasible lower-quota instance, 2 input or usage error,
// 3 internal invariant failure.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace spa
