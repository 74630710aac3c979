#ifndef TWWKIT_CLI_HPP
#define TWWKIT_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace twwkit {

/// Process exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitParse = 2,        // malformed input file or bad parameters
  kExitCertificate = 3,  // a certificate does not fit its graph
  kExitBudget = 4,
  kExitVerify = 5,
};

/// Runs the tool with `args` (without the program name). Reports go to
/// `out` as `key=value` lines; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// FNV-1a 64-bit digest, rendered as 16 hex digits.
std::string fnv1a_digest(const std::string& bytes);

}  // namespace twwkit

#endif  // TWWKIT_CLI_HPP
