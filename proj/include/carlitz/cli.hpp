#pragma once

#include <ostream>

namespace carlitz::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kMismatch = 1;
inline constexpr int kUsage = 2;
inline constexpr int kGuardrail = 3;

// Runs the `carlitz` command line. All output goes to the given streams.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace carlitz::cli
