#pragma once

#include <ostream>

namespace cyclothue::cli {

enum ExitCode : int { ok = 0, failure = 1, usage = 2, resource = 3 };

// Runs the command line in-process; JSON lines go to out, diagnostics to err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cyclothue::cli
