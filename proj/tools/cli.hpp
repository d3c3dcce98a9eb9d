#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fourier::cli {

enum ExitCode : int {
    kSuccess = 0,
    kUsageError = 1,
    kConstructionError = 2,
    kDecodeFailure = 3,
};

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace fourier::cli
