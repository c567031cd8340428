#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace macdual::cli {

/// Runs one subcommand; `args` excludes the program name.
/// Exit status: 0 success, 1 mathematical rejection, 2 usage or parse error.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace macdual::cli
