#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lierig::cli {

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`. Returns 0 on success or pass, 1 on a violation or
/// flagged discrepancy, 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lierig::cli
