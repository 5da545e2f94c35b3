#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace flopcalc {

enum ExitCode { kPass = 0, kFail = 1, kUsage = 2 };

struct IntRange {
  int lo = 0;
  int hi = 0;
};

/// "3..8" or "5". Throws Error on malformed or empty ranges.
IntRange parse_range(const std::string& s);

/// Runs the command line `args` (without the program name). Output goes to
/// `out`, diagnostics to `err`; returns the process exit status.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace flopcalc
