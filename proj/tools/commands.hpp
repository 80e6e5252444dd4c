#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "expint/types.hpp"

namespace expint::cli {

// Full command-line front end, callable in-process so tests can drive it
// with captured streams.  args excludes the program name.  Returns the
// process exit code: 0 success, 1 failed verification, 2 usage or domain
// errors, 3 internal numerical failures.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

// Maps a function name as written on the command line (Ei, E1, En:<n>, Ein,
// Si, Ci, li, li1, Li) to its identifier; throws UnknownFunction.
FnId parse_fn(const std::string& name);

// %.17g rendering shared by eval output and table CSV, so the value column
// reproduces point evaluations bit for bit.
std::string fmt17(double v);

}  // namespace expint::cli
