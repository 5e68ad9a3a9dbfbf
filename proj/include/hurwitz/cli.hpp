#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hurwitz::cli {

/// Exit statuses. `equiv` uses Ok / NotEquivalent; every failure is Error.
enum ExitCode : int { Ok = 0, NotEquivalent = 1, Error = 2 };

/// Runs one command line (program name excluded) and returns its exit
/// status. Results go to `out`, diagnostics to `err`.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace hurwitz::cli
