#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gauge5::cli {

/// Runs one command line (args excludes the program name). Returns 0 on
/// success, 2 when a hypothesis fails, 1 for any other error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gauge5::cli
