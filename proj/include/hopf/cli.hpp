// Command-line front end.  Exit codes: 0 success, 1 a check failed (the report
// is still written), 2 usage or input error.
#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hopf {

/// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hopf
