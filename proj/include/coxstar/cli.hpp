#ifndef COXSTAR_CLI_HPP_
#define COXSTAR_CLI_HPP_

#include <iosfwd>

namespace coxstar {

enum ExitCode : int { kExitOk = 0, kExitDomain = 1, kExitVerification = 2, kExitCap = 3 };

/// Entry point of the coxstar command line tool. Output goes to `out`,
/// diagnostics to `err`; nothing is written to `out` when a command fails.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace coxstar

#endif  // COXSTAR_CLI_HPP_
