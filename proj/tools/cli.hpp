#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace simpcalc::cli {

/// Runs the simpcalc command line on `args` (without the program name).
/// Returns 0 on success, 1 when --assert is given and a verdict fails, 2 on
/// input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace simpcalc::cli
