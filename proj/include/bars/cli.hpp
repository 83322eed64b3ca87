#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bars {

// Exit codes of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    // A certificate was issued, a tiling is invalid, or a packing is infeasible.
    kExitImpossible = 1,
    kExitInputError = 2,
    // Undecided sign, exhausted refinement, or search limit hit.
    kExitPrecision = 3,
};

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace bars
