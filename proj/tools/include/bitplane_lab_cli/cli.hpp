#pragma once

#include <iosfwd>

namespace bpl::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;

/// Entry point of the bitplane-lab command line.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bpl::cli
