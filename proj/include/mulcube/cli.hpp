#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mulcube {

// Runs the command-line interface on the given arguments (without argv[0]).
// Returns the process exit code: 0 success, 1 semantic failure (invalid
// patch, unexpected nonzero integral), 2 usage or parse error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mulcube
