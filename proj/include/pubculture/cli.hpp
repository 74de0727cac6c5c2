#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pubculture {

/// Entry point of the `pubculture` tool. `args` excludes the program name.
/// Query results go to `out`; diagnostics and error JSON go to `err`.
/// Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pubculture
