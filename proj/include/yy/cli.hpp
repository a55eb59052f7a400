#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace yy {

// Dispatch for the yy command line tool. Exit codes: 0 all requested checks
// pass, 1 verification failure, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace yy
