#pragma once

#include <iosfwd>

namespace schubert::cli {

enum ExitCode { ok = 0, invalid_input = 1, cross_check_failed = 2 };

/// Runs one command line; output and diagnostics go to the given streams.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace schubert::cli
