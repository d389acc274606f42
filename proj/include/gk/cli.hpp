#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gk::cli {

// Dispatches one subcommand. Results go to `out`, diagnostics to `err`.
// Exit status: 0 success, 1 usage error, 2 input-format error, 3 computation
// cap exceeded.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gk::cli
