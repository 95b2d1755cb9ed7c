#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "wgm/oracle.hpp"
#include "wgm/params.hpp"

namespace wgm {

/// One random parameter/detuning sample for the oracle cross-check.
struct Draw {
  SystemParams params;
  double delta = 0.0;
};

/// Sampling box: eta, g, h in [0, 10]; omega_j in [-5, 5]; gamma in [0, 1];
/// theta in [0, 2π); delta in [-10, 10]. All in GHz (cyclic) or radians.
Draw random_draw(std::mt19937_64& rng);

struct VerifyCase {
  std::size_t index = 0;
  Draw draw;
  oracle::DiscrepancyReport report;
};

struct VerifyResult {
  std::uint64_t seed = 0;
  std::size_t draws = 0;
  double max_rel_err = 0.0;
  double max_abs_err = 0.0;
  double max_residual = 0.0;
  double tolerance = 1e-9;
  /// Worst draws by relative error, largest first.
  std::vector<VerifyCase> worst;

  bool passed() const { return max_rel_err < tolerance; }
};

/// Runs oracle::compare over `draws` seeded samples. Throws InvalidParams when
/// draws == 0.
VerifyResult run_verification(std::size_t draws, std::uint64_t seed, std::size_t keep_worst = 5);

}  // namespace wgm
