#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace detkit {

/// Command-line entry point, re-entrant for tests. `args` excludes the
/// program name. Exit codes: 0 all checks as expected, 1 a mathematical
/// check failed, 2 usage or parse error.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace detkit
