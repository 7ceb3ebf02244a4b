#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace prodcolor {

// Full command-line entry point, separated from main() so tests can drive it
// in-process. Returns the process exit code:
//   0 success, 1 verification mismatch, 2 usage error, 3 budget exhausted.
// Results go to `out`; the version banner and error messages go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace prodcolor
