#ifndef PBERN_CLI_HPP
#define PBERN_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace pbern::cli {

enum ExitCode : int { kSuccess = 0, kVerificationFailed = 1, kUsageError = 2 };

// Runs one `pbern` invocation. args excludes the program name. Data goes to
// `out` (or the --out file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pbern::cli

#endif
