#pragma once

#include <iosfwd>

namespace zbrace {

/// Runs the command-line tool. Returns 0 when every check passed, 1 when a
/// check failed and 2 on input or usage errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace zbrace
