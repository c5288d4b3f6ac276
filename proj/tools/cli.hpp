#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace geodetic::cli {

enum ExitCode { kYes = 0, kNo = 1, kError = 2, kUnknown = 3 };

/// Runs one command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace geodetic::cli
