#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tricanon::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kParseError = 2,
  kUnsupportedRanks = 3,
  kCharacteristicTwo = 4,
  kFieldMismatch = 5,
  kSingularCertificate = 6,
  kBudgetExceeded = 7,
};

/// Runs one command line (args[0] is the program name); JSON reports go to
/// `out` unless --output is given, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tricanon::cli
