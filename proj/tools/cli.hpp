#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace affgr::cli {

/// Run the command line given args (without the program name).
/// Exit codes: 0 success, 1 verification failure, 2 usage / input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace affgr::cli
