#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ionforge::cli {

enum ExitCode : int {
    kSuccess = 0,
    kValidationError = 1,
    kInfeasible = 2,
    kInternalError = 3,
};

/// Runs the ion-forge command line. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ionforge::cli
