#ifndef AMO_CLI_HPP
#define AMO_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace amo::cli {

// Run the command-line tool against explicit streams. args excludes the
// program name. Exit codes: 0 success, 2 configuration/usage error,
// 3 numerical non-convergence.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace amo::cli

#endif
