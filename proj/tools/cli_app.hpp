#pragma once

#include <iosfwd>

namespace cli {

// Runs the command line against the shared library. Exit codes: 0 success,
// 1 counterexample found (verify), 2 input or validation error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cli
