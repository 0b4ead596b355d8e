#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fbtlab {

// Entry point shared by the binary and the in-process tests. args excludes
// the program name. Exit codes: 0 solved/verified/ok, 1 unsat or
// verification failed, 2 input error, 3 resource limit.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace fbtlab
