#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace binlr::cli {

/// Stable exit codes.
enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 2,
  kBudgetRefused = 3,
  kInputError = 4,
};

/// Runs `binlr <args...>`; args excludes the program name. The JSON report goes
/// to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// FNV-1a 64 of a file's bytes, rendered "fnv1a64:<16 hex digits>".
std::string file_digest(const std::string& path);

}  // namespace binlr::cli
