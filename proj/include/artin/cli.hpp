#ifndef ARTIN_CLI_HPP
#define ARTIN_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace artin::cli {

// Runs one command-line invocation (program name excluded from args); all
// output goes to the given streams so tests can drive the CLI in-process.
// Exit codes: 0 proven/success/yes, 1 refuted/no, 2 unknown, 64 usage
// error, 65 input error.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace artin::cli

#endif
