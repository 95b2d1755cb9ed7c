#include "wgm/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

namespace wgm {

namespace {

struct Vertex {
  double x;
  double y;
};

// Parabola through three neighbouring samples, in coordinates centred on the
// middle one: y - y1 = a u^2 + b u.
Vertex parabolic_vertex(double x0, double y0, double x1, double y1, double x2, double y2) {
  const double u0 = x0 - x1;
  const double u2 = x2 - x1;
  const double d0 = y0 - y1;
  const double d2 = y2 - y1;
  const double det = u0 * u2 * (u0 - u2);
  const double a = (d0 * u2 - d2 * u0) / det;
  const double b = (u0 * u0 * d2 - u2 * u2 * d0) / det;
  if (!(a > 0.0)) return {x1, y1};
  const double u = std::clamp(-b / (2.0 * a), u0, u2);
  return {x1 + u, y1 + a * u * u + b * u};
}

double crossing(double xa, double ya, double xb, double yb, double level) {
  if (yb == ya) return xb;
  return xa + (level - ya) * (xb - xa) / (yb - ya);
}

}  // namespace

std::vector<Dip> find_dips(std::span<const double> x, std::span<const double> y, double min_prominence) {
  if (x.empty() || y.empty()) throw EmptySpectrum("cannot search an empty spectrum for dips");
  if (x.size() != y.size()) throw InvalidParams("axis and data lengths differ");
  if (!(min_prominence > 0.0)) throw InvalidParams("min_prominence must be positive");

  const std::size_t n = y.size();
  std::vector<Dip> dips;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (!(y[i] < y[i - 1] && y[i] < y[i + 1])) continue;

    double left_max = y[i];
    std::size_t j = i;
    while (j > 0 && y[j - 1] >= y[i]) left_max = std::max(left_max, y[--j]);
    double right_max = y[i];
    std::size_t k = i;
    while (k + 1 < n && y[k + 1] >= y[i]) right_max = std::max(right_max, y[++k]);

    const double prominence = std::min(left_max, right_max) - y[i];
    if (prominence < min_prominence) continue;

    const double level = y[i] + 0.5 * prominence;
    std::size_t l = i;
    while (l > 0 && y[l - 1] < level) --l;
    const double x_left = l == 0 ? x[0] : crossing(x[l - 1], y[l - 1], x[l], y[l], level);
    std::size_t r = i;
    while (r + 1 < n && y[r + 1] < level) ++r;
    const double x_right = r + 1 == n ? x[n - 1] : crossing(x[r], y[r], x[r + 1], y[r + 1], level);

    const Vertex v = parabolic_vertex(x[i - 1], y[i - 1], x[i], y[i], x[i + 1], y[i + 1]);
    dips.push_back({v.x, std::max(0.0, v.y), prominence, x_right - x_left});
  }
  std::sort(dips.begin(), dips.end(), [](const Dip& a, const Dip& b) { return a.location < b.location; });
  return dips;
}

std::vector<Dip> find_dips(const SpectrumTable& spectrum, Quantity quantity, double min_prominence) {
  const auto y = spectrum.column(quantity);
  return find_dips(spectrum.x, y, min_prominence);
}

ContrastMetrics contrast_metrics(const SpectrumTable& s) {
  ContrastMetrics m;
  if (s.rows.empty()) return m;
  for (const auto& r : s.rows) {
    m.max_contrast_R = std::max(m.max_contrast_R, r.contrast_R);
    m.max_contrast_T = std::max(m.max_contrast_T, r.contrast_T);
  }
  if (s.rows.size() < 2) {
    m.mean_contrast_R = s.rows.front().contrast_R;
    m.mean_contrast_T = s.rows.front().contrast_T;
    return m;
  }
  double int_R = 0.0;
  double int_T = 0.0;
  for (std::size_t i = 1; i < s.rows.size(); ++i) {
    const double dx = s.x[i] - s.x[i - 1];
    int_R += 0.5 * dx * (s.rows[i].contrast_R + s.rows[i - 1].contrast_R);
    int_T += 0.5 * dx * (s.rows[i].contrast_T + s.rows[i - 1].contrast_T);
  }
  const double span = s.x.back() - s.x.front();
  m.mean_contrast_R = int_R / span;
  m.mean_contrast_T = int_T / span;
  return m;
}

std::string_view to_string(Regime r) {
  switch (r) {
    case Regime::UR_dominant: return "UR_dominant";
    case Regime::UT_dominant: return "UT_dominant";
    case Regime::UR_and_UT: return "UR_and_UT";
    case Regime::neither: return "neither";
  }
  return "?";
}

RegimeLabel label_regime(const ContrastMetrics& metrics, RegimeThresholds thresholds) {
  RegimeLabel label;
  label.max_contrast_R = metrics.max_contrast_R;
  label.max_contrast_T = metrics.max_contrast_T;
  label.thresholds = thresholds;
  const bool ur = metrics.max_contrast_R >= thresholds.tau_R;
  const bool ut = metrics.max_contrast_T >= thresholds.tau_T;
  if (ur && ut) {
    label.regime = Regime::UR_and_UT;
  } else if (ur) {
    label.regime = Regime::UR_dominant;
  } else if (ut) {
    label.regime = Regime::UT_dominant;
  }
  return label;
}

RegimeLabel classify_regime(const SystemParams& base, std::pair<double, double> band, RegimeThresholds thresholds,
                            int resolution, int threads) {
  const AxisSpec axis{Parameter::delta, band.first, band.second, resolution};
  return label_regime(contrast_metrics(sweep1d(base, axis, 0.0, threads)), thresholds);
}

std::vector<double> expected_dip_positions(Quantity quantity, double omega1, double omega2) {
  switch (quantity) {
    case Quantity::R_f: return {-std::abs(omega1), std::abs(omega1)};
    case Quantity::R_b: return {-std::abs(omega2), std::abs(omega2)};
    case Quantity::T_f: return {-omega1, -omega2};
    case Quantity::T_b: return {omega1, omega2};
    case Quantity::contrast_R:
    case Quantity::contrast_T: break;
  }
  return {};
}

CorrespondenceReport dip_correspondence(const std::vector<Dip>& dips, Quantity quantity, double omega1,
                                        double omega2, double tolerance) {
  if (!(tolerance > 0.0)) throw InvalidParams("correspondence tolerance must be positive");
  std::vector<double> expected = expected_dip_positions(quantity, omega1, omega2);
  std::sort(expected.begin(), expected.end());

  struct Candidate {
    double distance;
    double location;
    std::size_t e;
    std::size_t d;
  };
  std::vector<Candidate> candidates;
  for (std::size_t e = 0; e < expected.size(); ++e) {
    for (std::size_t d = 0; d < dips.size(); ++d) {
      const double dist = std::abs(dips[d].location - expected[e]);
      if (dist <= tolerance) candidates.push_back({dist, dips[d].location, e, d});
    }
  }
  std::sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
    return std::tie(a.distance, a.location, a.e) < std::tie(b.distance, b.location, b.e);
  });

  std::vector<bool> used_e(expected.size(), false);
  std::vector<bool> used_d(dips.size(), false);
  CorrespondenceReport rep;
  rep.quantity = quantity;
  for (const auto& c : candidates) {
    if (used_e[c.e] || used_d[c.d]) continue;
    used_e[c.e] = used_d[c.d] = true;
    rep.matched.push_back({expected[c.e], dips[c.d], dips[c.d].location - expected[c.e]});
  }
  std::sort(rep.matched.begin(), rep.matched.end(),
            [](const MatchedDip& a, const MatchedDip& b) { return a.expected < b.expected; });
  for (std::size_t e = 0; e < expected.size(); ++e) {
    if (!used_e[e]) rep.unmatched_expected.push_back(expected[e]);
  }
  for (std::size_t d = 0; d < dips.size(); ++d) {
    if (!used_d[d]) rep.unmatched_dips.push_back(dips[d]);
  }
  return rep;
}

}  // namespace wgm
