#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace faithful::cli {

enum ExitCode : int {
  ok = 0,
  unfaithful = 1,
  usage_error = 2,
  budget_exhausted = 3,
};

/// Runs one command line (without the program name). Reads stdin from `in`
/// and writes results to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace faithful::cli
