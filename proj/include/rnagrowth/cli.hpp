#ifndef RNAGROWTH_CLI_HPP
#define RNAGROWTH_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace rnagrowth::cli {

// Exit codes: 0 success, 1 usage or model errors, 2 validation failure,
// 3 numeric non-convergence.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rnagrowth::cli

#endif
