#pragma once

// The `nse` command line: list, curve, verify, evolve, collide.

#include <iosfwd>

namespace nse::cli {

enum ExitCode : int {
    exit_pass = 0,
    exit_failure = 1,  // a verification case failed
    exit_usage = 2,
    exit_abort = 3,  // numerical abort (non-finite field, non-convergence)
};

/// Runs one invocation. Reports and CSV go to `out` unless an output path is
/// given; messages go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace nse::cli
