#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cadlab::cli {

enum ExitCode : int { ok = 0, usage = 1, parse_error = 2, computation_error = 3 };

/// Runs the command line with args (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cadlab::cli
