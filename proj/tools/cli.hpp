#pragma once

// Batch front end. Machine output goes to `out` or --output, logs to `err`.

#include <ostream>
#include <string>
#include <vector>

namespace prescribed::cli {

enum ExitCode : int { success = 0, mismatch = 1, input_error = 2, effort_exhausted = 3 };

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace prescribed::cli
