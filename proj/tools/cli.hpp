#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace permlab::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsageError = 2 };

/// Runs the `perm` command line. `args` excludes the program name.
/// Line-delimited JSON (or the selected --format) goes to `out`; human
/// readable text goes to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace permlab::cli
