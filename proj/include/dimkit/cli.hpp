#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dimkit {

/// Exit codes of `solve`; other verbs use 0 for success and kInputError for
/// bad command lines or unreadable input.
inline constexpr int kExitDim = 0;
inline constexpr int kExitNoDim = 1;
inline constexpr int kExitInconclusive = 2;
inline constexpr int kInputError = 3;
inline constexpr int kInternalError = 4;  // a broken invariant, never expected

/// Runs one command line (args excludes the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Worker count for cross-check: DIMKIT_THREADS when set and positive, else
/// the hardware concurrency.
unsigned worker_count();

}  // namespace dimkit
