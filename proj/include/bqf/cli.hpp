#pragma once

#include <string>
#include <vector>

namespace bqf::cli {

/// Exit codes of the command-line front end.
enum Exit : int {
  kOk = 0,
  kBadForm = 1,         // invalid, reducible or degenerate form
  kEmpty = 2,           // no representation / empty result
  kPrecondition = 3,    // value mismatch, zero value, missing box, bad flags
  kVerification = 4,    // a transporter or line failed its exact checks
};

struct CommandOutcome {
  int exit_code = kOk;
  /// JSON document (newline-terminated) destined for standard output.
  std::string out;
  /// Error/warning JSON lines destined for standard error.
  std::string err;
};

/// Runs one subcommand. args excludes the program name, e.g.
/// {"transport", "--form", "1,0,1", "--rep1", "1,2", "--rep2", "2,1"}.
CommandOutcome run(const std::vector<std::string>& args);

}  // namespace bqf::cli
