#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace strebel {

enum ExitCode { kOk = 0, kFailure = 1, kUsage = 2, kDomain = 3, kCheckFailed = 4 };

// args excludes the program name. Output goes to out unless --output names a file.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Shortest representation that parses back to the same double (at most 17 significant digits).
std::string format_double(double x);

}  // namespace strebel
