#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qeuler {

// Runs one CLI invocation; args excludes the program name. Reports go to
// out; diagnostics to err. Returns 0 on success, 2 on usage/validation
// errors, 3 when a verified invariant fails.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qeuler
