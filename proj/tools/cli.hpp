#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace trimap::cli {

enum ExitCode : int {
    kSuccess = 0,
    kDomainFailure = 1,
    kInputError = 2,
    kIoError = 3,
};

/// Runs one command line (without the program name) and returns its exit code.
/// Regular output goes to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace trimap::cli
