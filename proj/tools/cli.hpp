#pragma once

#include <iosfwd>

namespace fuzzideal::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kParse = 2;
inline constexpr int kResource = 3;
inline constexpr int kInvalidFuzzy = 4;
inline constexpr int kConstant = 5;
inline constexpr int kCheckFailed = 6;

/// Runs the command line in-process; reports go to `out` (or --out), errors
/// to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fuzzideal::cli
