#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace omega::cli {

// Parses and dispatches one command line (without the program name).
// Text, JSON and PPM bytes go to out; diagnostics go to err.
// Exit codes: 0 success, 1 domain error, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace omega::cli
