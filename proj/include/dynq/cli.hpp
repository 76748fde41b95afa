#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dynq {

/// Runs one CLI command; argv excludes the program name.  Returns the
/// process exit code: 0 success, 1 domain/usage error, 2 verification
/// failure.  Output is byte-deterministic for identical inputs.
int run_cli(const std::vector<std::string>& argv, std::ostream& out,
            std::ostream& err);

}  // namespace dynq
