#pragma once

#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "wgm/params.hpp"
#include "wgm/scatter.hpp"
#include "wgm/sweep.hpp"

namespace wgm {

class EmptySpectrum : public Error {
 public:
  using Error::Error;
};

/// A local minimum of a sampled curve (the "low peaks" of a spectrum).
struct Dip {
  double location = 0.0;
  double depth = 0.0;
  /// Rise from the minimum to the lower of the two enclosing maxima, each taken
  /// over the range up to the next lower sample (or the edge of the data).
  double prominence = 0.0;
  double width_at_half_prominence = 0.0;
};

inline constexpr double kDefaultMinProminence = 0.05;

/// Strict interior local minima with prominence >= min_prominence, refined by a
/// 3-point parabola through the discrete minimum and its neighbours. The axis
/// must be strictly increasing. Results are sorted by location.
std::vector<Dip> find_dips(std::span<const double> x, std::span<const double> y, double min_prominence);
std::vector<Dip> find_dips(const SpectrumTable& spectrum, Quantity quantity,
                           double min_prominence = kDefaultMinProminence);

struct ContrastMetrics {
  double max_contrast_R = 0.0;
  double max_contrast_T = 0.0;
  /// Trapezoid integral of the contrast over the axis, divided by its span.
  double mean_contrast_R = 0.0;
  double mean_contrast_T = 0.0;
};

ContrastMetrics contrast_metrics(const SpectrumTable& spectrum);

enum class Regime { UR_dominant, UT_dominant, UR_and_UT, neither };

std::string_view to_string(Regime r);

struct RegimeThresholds {
  double tau_R = 0.3;
  double tau_T = 0.3;
};

struct RegimeLabel {
  Regime regime = Regime::neither;
  double max_contrast_R = 0.0;
  double max_contrast_T = 0.0;
  RegimeThresholds thresholds;
};

RegimeLabel label_regime(const ContrastMetrics& metrics, RegimeThresholds thresholds = {});

/// Sweeps delta over `band` at `resolution` points and labels the result.
RegimeLabel classify_regime(const SystemParams& base, std::pair<double, double> band,
                            RegimeThresholds thresholds = {}, int resolution = kDefaultResolution,
                            int threads = 0);

/// Zeeman-determined positions where the given quantity is expected to dip at
/// theta = pi: R_f at ±omega1, R_b at ±omega2, T_f at -omega1 and -omega2,
/// T_b at +omega1 and +omega2. Contrasts have no expectations.
std::vector<double> expected_dip_positions(Quantity quantity, double omega1, double omega2);

struct MatchedDip {
  double expected = 0.0;
  Dip dip;
  double offset = 0.0;  // dip.location - expected
};

struct CorrespondenceReport {
  Quantity quantity = Quantity::R_f;
  std::vector<MatchedDip> matched;  // ordered by expected position
  std::vector<double> unmatched_expected;
  std::vector<Dip> unmatched_dips;

  bool all_matched() const { return unmatched_expected.empty(); }
};

/// Greedy nearest matching within `tolerance`: candidate pairs are taken in
/// order of increasing |offset|, ties broken by lower dip location; each dip
/// and each expectation is used at most once.
CorrespondenceReport dip_correspondence(const std::vector<Dip>& dips, Quantity quantity, double omega1,
                                        double omega2, double tolerance);

}  // namespace wgm
