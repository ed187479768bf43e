#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nchilb {

// Runs the command line against the given streams. Exit codes: 0 success,
// 1 verification failure, 2 usage or cap errors.
int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nchilb
