#pragma once

#include <ostream>

namespace comgraph::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitClaimFailed = 2;

/// Entry point shared by the executable and the tests. Writes results to
/// `out` and diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace comgraph::cli
