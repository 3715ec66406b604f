#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace t2::cli {

// Runs one tool invocation. `args` is the command line without the program
// name; results go to `out`, diagnostics to `err`. Returns the exit code:
// 0 success, 1 usage, 2 parse or type error, 3 an honest negative (an
// Unknown search verdict, a failing witness, a failing report).
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace t2::cli
