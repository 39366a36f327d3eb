#pragma once

#include <iosfwd>

namespace arlab::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kParseError = 2,
  kCapExceeded = 3,
  kInvalidRate = 4,
  kNotRealizable = 5,
};

/// Entry point of the `arlab` tool with injectable streams.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace arlab::cli
