#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace motivic::cli {

/// Runs the motivic-power command line. `args` excludes the program name.
/// Returns 0 on success, 1 on computation errors or failed checks, 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace motivic::cli
