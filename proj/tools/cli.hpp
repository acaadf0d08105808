#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sigma::cli {

// Parses and runs one invocation; args excludes the program name.
// Returns the process exit status: 0 on success and on verification runs
// with zero violations, 1 on violations or evaluator disagreement, 2 on
// usage and input errors.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace sigma::cli
