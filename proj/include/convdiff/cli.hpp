#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace convdiff::cli {

enum ExitCode : int { kOk = 0, kUserError = 1, kCrossCheckMismatch = 2 };

/// Entry point behind the `convdiff` binary. argv[0] is the program name.
int run(const std::vector<std::string> &argv, std::ostream &out,
        std::ostream &err);

} // namespace convdiff::cli
