#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fullow::cli {

/// Runs the command line `args` (without the program name). Returns the
/// process exit status: 0 on success, 1 on runtime failure, 2 on bad usage.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// $FULLOW_OUTPUT_DIR, or "fullow-out" when unset.
std::string default_output_dir();

}  // namespace fullow::cli
