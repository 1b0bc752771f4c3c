#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lieinv {

// Runs one command line (without the program name). Reports go to out,
// diagnostics to err. Returns 0 when the command computed a report (failing
// verdicts included), 1 on usage, input or IO errors, 2 on an internal
// invariant breach.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace lieinv
