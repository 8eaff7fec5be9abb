#ifndef ECC_TOOLS_CLI_HPP
#define ECC_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace ecc::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kParse = 2,
    kPrecondition = 3,
    kMismatch = 4,
};

/// Runs one command. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ecc::cli

#endif  // ECC_TOOLS_CLI_HPP
