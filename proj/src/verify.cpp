#include "wgm/verify.hpp"

#include <algorithm>
#include <numbers>

namespace wgm {

Draw random_draw(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> rate(0.0, 10.0);
  std::uniform_real_distribution<double> zeeman(-5.0, 5.0);
  std::uniform_real_distribution<double> loss(0.0, 1.0);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
  std::uniform_real_distribution<double> detuning(-10.0, 10.0);
  // Sequenced explicitly: argument evaluation order is unspecified.
  RawParams raw;
  raw.eta = rate(rng);
  raw.g = rate(rng);
  raw.h = rate(rng);
  raw.omega1 = zeeman(rng);
  raw.omega2 = zeeman(rng);
  raw.gamma = loss(rng);
  raw.theta = phase(rng);
  const double delta = detuning(rng);
  return {SystemParams(raw), delta};
}

VerifyResult run_verification(std::size_t draws, std::uint64_t seed, std::size_t keep_worst) {
  if (draws == 0) throw InvalidParams("verification needs at least one draw");
  VerifyResult res;
  res.seed = seed;
  res.draws = draws;
  std::mt19937_64 rng(seed);
  std::vector<VerifyCase> cases;
  cases.reserve(draws);
  for (std::size_t i = 0; i < draws; ++i) {
    Draw d = random_draw(rng);
    auto rep = oracle::compare(d.params, d.delta);
    res.max_rel_err = std::max(res.max_rel_err, rep.max_rel_err);
    res.max_abs_err = std::max(res.max_abs_err, rep.max_abs_err);
    res.max_residual = std::max(res.max_residual, rep.max_residual);
    cases.push_back({i, d, rep});
  }
  const std::size_t keep = std::min(keep_worst, cases.size());
  std::partial_sort(cases.begin(), cases.begin() + static_cast<std::ptrdiff_t>(keep), cases.end(),
                    [](const VerifyCase& a, const VerifyCase& b) {
                      if (a.report.max_rel_err != b.report.max_rel_err) {
                        return a.report.max_rel_err > b.report.max_rel_err;
                      }
                      return a.index < b.index;
                    });
  cases.erase(cases.begin() + static_cast<std::ptrdiff_t>(keep), cases.end());
  res.worst = std::move(cases);
  return res;
}

}  // namespace wgm
