#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wgm::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNumerical = 3;

/// Environment variable consulted when --threads is not given.
inline constexpr const char* kThreadsEnv = "WGM_SCATTER_THREADS";

/// Entry point of `wgm-scatter`. `args` excludes the program name. Data goes
/// to `out` when no output path is configured; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wgm::cli
