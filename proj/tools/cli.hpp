#pragma once

#include <iosfwd>

namespace quivermag::cli {

// Exit codes shared by every subcommand.
enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kInputError = 2,
  kInfiniteDimensional = 3,
  kUnresolvedGlobalDimension = 4,
};

// Entry point of the `quivermag` tool with injectable streams.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace quivermag::cli
