#ifndef SL2ROOTS_TOOLS_CLI_HPP
#define SL2ROOTS_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace sl2roots::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kBadArgs = 2;
inline constexpr int kNoRoots = 3;
inline constexpr int kNotSurjective = 4;
inline constexpr int kCapExceeded = 5;

/// Runs one command line. `args` excludes the program name, e.g.
/// {"census", "--q", "5", "-n", "2", "--brute"}.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sl2roots::cli

#endif  // SL2ROOTS_TOOLS_CLI_HPP
