#pragma once

#include <iosfwd>

namespace tate {

// Parses argv and runs one subcommand. Returns the process exit code:
// 0 success / all checks pass, 1 verification failure, 2 usage error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tate
