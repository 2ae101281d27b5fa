#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ghct::cli {

enum ExitCode : int { kOk = 0, kReject = 1, kInputError = 2 };

/// Runs the `ghct` command line (args exclude the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ghct::cli
