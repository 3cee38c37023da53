#pragma once

#include <iosfwd>

namespace crysext::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_verification_failed = 1,
    exit_usage = 2,
    exit_budget = 3,
};

/// Entry point of the `crysext` tool. Reads request JSON from `in` when
/// `--in -` is given; responses go to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace crysext::cli
