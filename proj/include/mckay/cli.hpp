#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mckay {

// Parse and run one command-line invocation (program name excluded).
// Returns the process exit code: 0 ok, 2 bad input, 3 identity violation,
// 4 internal error. All output goes to the supplied streams, so tests can
// capture it byte for byte.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace mckay
