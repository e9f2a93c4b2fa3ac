#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bym {

/// Runs the command-line front end. Exit codes: 0 success (and verification
/// passed), 1 verification failed, 2 usage or input error.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace bym
