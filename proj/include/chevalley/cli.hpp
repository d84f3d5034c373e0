#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace chev {

/// Runs the command line (without the program name). Returns 0 on success,
/// 1 when a mathematical check fails and 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chev
