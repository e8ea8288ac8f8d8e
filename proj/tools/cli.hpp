#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace nestobetti::cli {

/// Runs one command line (without the program name). Tables go to `out`;
/// failures write a one-line JSON record to `err`. Returns the exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nestobetti::cli
