#pragma once

#include <string>
#include <vector>

#include "wgm/params.hpp"
#include "wgm/scatter.hpp"

namespace wgm {

inline constexpr int kDefaultResolution = 601;

/// Inclusive linear grid over one parameter.
struct AxisSpec {
  Parameter param = Parameter::delta;
  double start = -6.0;
  double stop = 6.0;
  int count = kDefaultResolution;

  /// Throws InvalidParams unless count >= 2 and stop > start.
  void validate() const;
  /// start + i (stop - start) / (count - 1); the last point is exactly stop.
  double value(int i) const;
  std::vector<double> values() const;
};

struct Provenance {
  std::string tool_version;
  std::string timestamp;  // empty: not recorded
};

Provenance default_provenance();

struct SpectrumTable {
  AxisSpec axis;
  /// Detuning used when the axis scans something other than delta.
  double fixed_delta = 0.0;
  SystemParams base;
  std::vector<double> x;
  std::vector<ScatteringPowers> rows;
  Provenance provenance;

  std::vector<double> column(Quantity q) const;
};

struct GridTable {
  AxisSpec axis1;
  AxisSpec axis2;
  Quantity quantity = Quantity::R_f;
  double fixed_delta = 0.0;
  SystemParams base;
  /// Row-major: values[i * axis2.count + j] is (axis1 point i, axis2 point j).
  std::vector<double> values;
  Provenance provenance;

  double at(int i, int j) const { return values[static_cast<std::size_t>(i) * axis2.count + j]; }
};

/// Number of OpenMP workers to use; threads <= 0 means the runtime default.
int resolve_threads(int threads);

// Parallel kernels. Each grid point is evaluated independently and written to
// its own slot, so the result is bit-identical for any thread count.
SpectrumTable sweep1d(const SystemParams& base, const AxisSpec& axis, double fixed_delta = 0.0,
                      int threads = 0);
GridTable sweep2d(const SystemParams& base, const AxisSpec& axis1, const AxisSpec& axis2,
                  Quantity quantity, double fixed_delta = 0.0, int threads = 0);

// Serial reference implementations kept for testing and benchmarking.
SpectrumTable sweep1d_serial(const SystemParams& base, const AxisSpec& axis, double fixed_delta = 0.0);
GridTable sweep2d_serial(const SystemParams& base, const AxisSpec& axis1, const AxisSpec& axis2,
                         Quantity quantity, double fixed_delta = 0.0);

}  // namespace wgm
