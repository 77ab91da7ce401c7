#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace pairweave::cli {

enum ExitCode : int {
    kPass = 0,
    kChecksFailed = 1,
    kUsage = 2,
    kInvalidParameter = 3,
};

/// Runs one command line (without the program name). Reports go to `out`
/// unless --out names a file; usage text and diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pairweave::cli
