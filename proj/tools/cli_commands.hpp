#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mertens::cli {

/// Runs the command line `args` (without the program name), writing normal
/// output to `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mertens::cli
