#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace codomin {

/// Exit codes of the command line.
enum ExitCode : int { kExitOk = 0, kExitInvalid = 2, kExitUnsupported = 3 };

/// Runs one `codomin` command. `args` excludes the program name. Reports go
/// to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace codomin
