#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bicirc::cli {

// Runs the command line given args (without the program name), writing to the
// provided streams. Returns the process exit status: 0 on success, 1 on a
// failed check or computation error, 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bicirc::cli
