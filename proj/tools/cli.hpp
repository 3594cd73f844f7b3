#pragma once

#include <ostream>

namespace unimodal::cli {

// Exit codes: 0 ok, 1 an assertion or verification failed, 2 bad usage.
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

// Whole command line in, exit code out. Nothing touches std::cout/cerr
// directly so tests can drive it in-process.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace unimodal::cli
