#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hypoh {

/// Runs the command line (without the program name). Exit codes: 0 success,
/// 1 domain error, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hypoh
