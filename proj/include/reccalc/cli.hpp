#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace reccalc {

/// Runs one CLI invocation (args exclude the program name) writing to the
/// given streams. Exit codes: 0 success, 1 parse/usage error, 2 verification
/// failure, 3 internal invariant violation.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace reccalc
