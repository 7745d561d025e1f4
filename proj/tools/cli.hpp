#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace q5::cli {

enum ExitCode : int { kPass = 0, kFailed = 1, kInputError = 2 };

/// Runs one command line (without the program name). Everything goes to
/// `out`/`err`; nothing touches the process streams.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace q5::cli
