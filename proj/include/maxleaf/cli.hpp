#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace maxleaf::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kUsage = 1,         ///< bad flags, bad generator spec, unsupported size
  kParseError = 2,    ///< unreadable or malformed input graph
  kDisconnected = 3,  ///< input graph is not connected
  kViolation = 4,     ///< certificate, lemma or approximation bound failed
  kBudget = 5,        ///< oracle budget exhausted
};

/// Runs one command line (without the program name). Reads "-" inputs from
/// `in`; results go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace maxleaf::cli
