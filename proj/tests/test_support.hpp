#pragma once

#include <algorithm>
#include <complex>
#include <numbers>
#include <random>

#include "wgm/params.hpp"

namespace wgm::test {

inline constexpr double kPi = std::numbers::pi;

/// Reference family: omega1=2, omega2=3.5, g=h=1, gamma=0.2, theta=pi.
inline RawParams reference(double eta) { return {eta, 1.0, 1.0, 2.0, 3.5, 0.2, kPi}; }

/// Random draw inside the box used throughout the property tests.
inline RawParams random_raw(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> rate(0.0, 10.0);
  std::uniform_real_distribution<double> zeeman(-5.0, 5.0);
  std::uniform_real_distribution<double> loss(0.0, 1.0);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * kPi);
  RawParams r;
  r.eta = rate(rng);
  r.g = rate(rng);
  r.h = rate(rng);
  r.omega1 = zeeman(rng);
  r.omega2 = zeeman(rng);
  r.gamma = loss(rng);
  r.theta = phase(rng);
  return r;
}

inline double random_delta(std::mt19937_64& rng) { return std::uniform_real_distribution<double>(-10.0, 10.0)(rng); }

inline double rel_diff(std::complex<double> a, std::complex<double> b) {
  const double scale = std::max({std::abs(a), std::abs(b), 1e-3});
  return std::abs(a - b) / scale;
}

}  // namespace wgm::test
