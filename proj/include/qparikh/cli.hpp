#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qparikh::cli {

/// Runs one command line (without the program name). Returns the exit code:
/// 0 on success, 1 for domain errors or failed checks, 2 for usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qparikh::cli
