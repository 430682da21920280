#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace phg::cli {

// Runs one command. Returns 0 on success, 2 on usage errors, 3 on I/O or
// format errors. Decision results are stdout content, never exit codes.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace phg::cli
