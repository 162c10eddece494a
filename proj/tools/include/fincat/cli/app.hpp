#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fincat::cli {

/// Runs the command line `args` (without the program name). Returns 0 when
/// every check passes, 1 when a check fails and 2 on input errors.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fincat::cli
