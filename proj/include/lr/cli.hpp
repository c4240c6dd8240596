#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lr {

// Runs one CLI command; results on `out`, diagnostics on `err`.
// Exit status: 0 success, 1 domain error, 2 usage error, 3 exceeded budget or
// non-polynomial sample window.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lr
