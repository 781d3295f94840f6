#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "abtor/error.hpp"

namespace abtor::cli {

/// Exit status for a library error: 1 for bad input, 2 for a mathematical
/// failure, 3 for a resource guard.
int exit_code(Errc code);

/// Runs one command. `args` excludes the program name; a file argument of
/// `-` reads `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace abtor::cli
