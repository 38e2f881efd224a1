#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace pk {

/// Runs the command line tool on `args` (without the program name).
/// Returns the exit status: 0 verified, 1 negative result, 2 input or bound
/// error. The default seed can be overridden with PENCILKIT_SEED.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pk
