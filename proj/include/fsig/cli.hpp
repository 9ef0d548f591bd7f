#pragma once

#include <iosfwd>

namespace fsig {

/// Exit codes of the command-line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 2,      // bad flags or invalid group/characteristic
  kExitInternal = 3,   // an internal invariant failed
};

/// Runs the `fsig` command line with the given arguments (argv[0] included).
/// Reports go to `out`, diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fsig
