#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace treebraid::cli {

// Runs the command-line tool on the given arguments (program name excluded),
// writing results to out and diagnostics to err. Returns the process exit
// code: 0 success, 2 bad input, 3 failed internal consistency check,
// 4 resource bound exceeded.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace treebraid::cli
