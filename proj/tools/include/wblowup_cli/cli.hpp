#ifndef WBLOWUP_CLI_CLI_HPP
#define WBLOWUP_CLI_CLI_HPP

#include <iosfwd>

namespace wblowup::cli {

enum ExitCode : int { kOk = 0, kFailure = 1, kParseError = 2, kExhausted = 3 };

/// Entry point of the wblowup command. Human output goes to out, diagnostics
/// to err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace wblowup::cli

#endif  // WBLOWUP_CLI_CLI_HPP
