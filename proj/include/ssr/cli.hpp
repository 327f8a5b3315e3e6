#ifndef SSR_CLI_HPP
#define SSR_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace ssr::cli {

/// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitRejected = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (args[0] is the program name). Documents are
/// read from --input (or standard input for "-") and written to --out or
/// `out`; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace ssr::cli

#endif  // SSR_CLI_HPP
