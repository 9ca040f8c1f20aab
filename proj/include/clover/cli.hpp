#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace clover::cli {

// Runs one command with the given arguments (program name excluded) and
// returns the process exit status: 0 success, 2 malformed input or
// parameter error, 3 inequivalent classification, 4 property suite failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace clover::cli
