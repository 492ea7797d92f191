#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace commat::cli {

/// Runs one invocation (args excludes the program name). Returns the process
/// exit status: 0 success, 1 a failed check or mismatch, 2 a usage or input
/// error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace commat::cli
