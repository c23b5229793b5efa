#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wfam {

// Dispatches one CLI invocation. Certificates go to `out` (machine
// readable); prose and errors go to `err`. Exit codes: 0 success or
// property holds, 1 property fails, 2 usage or format error, 3 node or
// resource limit hit.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wfam
