#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "psum/verify.hpp"

namespace psum {

/// Exit statuses of the command-line tool.
enum ExitStatus : int {
    kExitOk = 0,
    kExitVerificationFailed = 1,
    kExitUsage = 2,
};

/// kExitOk when every report passes, kExitVerificationFailed otherwise.
int sweep_exit_status(const std::vector<TheoremReport>& reports);

/// Runs one command line (args excludes the program name). Results go to
/// `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace psum
