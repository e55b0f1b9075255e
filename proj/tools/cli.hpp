#pragma once

#include <iosfwd>

namespace symcone::cli {

// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 input parse error, 4 precondition violation (including budget
// exhaustion, reported distinctly in the diagnostics).
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace symcone::cli
