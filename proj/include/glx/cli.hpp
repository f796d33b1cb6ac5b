#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

namespace glx {

enum ExitCode : int {
  kExitOk = 0,
  kExitViolation = 1,
  kExitInvalidInput = 2,
  kExitNonConvergence = 3,
};

/// Inline JSON when the text starts with '[' or '{', otherwise a file path.
std::string read_inline_or_file(std::string_view arg);

/// Entry point of the `glx` tool. Machine output goes to `out`, every
/// diagnostic to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace glx
