#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace padic::cli {

/// Dispatches one command line. Returns the process exit code:
/// 0 success/divides, 1 property-refuted/not-divides, 2 error/undecided.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace padic::cli
