#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sigshift::cli {

enum ExitCode : int { kOk = 0, kFailure = 1, kBadInput = 2 };

/// Runs one command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sigshift::cli
