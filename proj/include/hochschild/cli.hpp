#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hochschild {

enum ExitCode : int {
    exit_ok = 0,
    exit_input_error = 1,
    exit_cap_overflow = 2,
    exit_mismatch = 3,
};

/// Runs one `hhtrunc` invocation. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace hochschild
