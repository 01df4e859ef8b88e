#pragma once

#include <iosfwd>

namespace floqlat::cli {

inline constexpr const char* kVersion = "1.0.0";

/// Output directory override for relative -o paths.
inline constexpr const char* kOutputDirEnv = "FLOQLAT_OUTPUT_DIR";

/// Parses argv, runs the subcommand and writes its table to -o (or `out`
/// without -o). Returns 0 on success, 2 on a validation error, 1 otherwise.
int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace floqlat::cli
