#pragma once

namespace kobs::cli {

/// Exit codes: 0 success, 1 usage or configuration error, 2 a check failed.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitCheck = 2;

int run(int argc, char** argv);

}  // namespace kobs::cli
