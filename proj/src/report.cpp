#include "wgm/report.hpp"

#include <cmath>

namespace wgm::report {

using nlohmann::ordered_json;

namespace {

ordered_json number(double v) { return std::isfinite(v) ? ordered_json(v) : ordered_json(nullptr); }

ordered_json complex_json(cplx z) { return ordered_json::array({number(z.real()), number(z.imag())}); }

}  // namespace

ordered_json to_json(const SystemParams& p) {
  return {{"eta_GHz", number(p.eta())},       {"g_GHz", number(p.g())},
          {"h_GHz", number(p.h())},           {"omega1_GHz", number(p.omega1())},
          {"omega2_GHz", number(p.omega2())}, {"gamma_GHz", number(p.gamma())},
          {"theta_rad", number(p.theta())}};
}

ordered_json to_json(const Dip& d) {
  return {{"location", number(d.location)},
          {"depth", number(d.depth)},
          {"prominence", number(d.prominence)},
          {"width_at_half_prominence", number(d.width_at_half_prominence)}};
}

ordered_json to_json(const ContrastMetrics& m) {
  return {{"max_contrast_R", number(m.max_contrast_R)},
          {"max_contrast_T", number(m.max_contrast_T)},
          {"mean_contrast_R", number(m.mean_contrast_R)},
          {"mean_contrast_T", number(m.mean_contrast_T)}};
}

ordered_json to_json(const RegimeLabel& r) {
  return {{"label", std::string(to_string(r.regime))},
          {"max_contrast_R", number(r.max_contrast_R)},
          {"max_contrast_T", number(r.max_contrast_T)},
          {"tau_R", number(r.thresholds.tau_R)},
          {"tau_T", number(r.thresholds.tau_T)}};
}

ordered_json to_json(const CorrespondenceReport& c) {
  ordered_json matched = ordered_json::array();
  for (const auto& m : c.matched) {
    matched.push_back({{"expected", number(m.expected)}, {"offset", number(m.offset)}, {"dip", to_json(m.dip)}});
  }
  ordered_json unmatched_expected = ordered_json::array();
  for (double e : c.unmatched_expected) unmatched_expected.push_back(number(e));
  ordered_json unmatched_dips = ordered_json::array();
  for (const auto& d : c.unmatched_dips) unmatched_dips.push_back(to_json(d));
  return {{"quantity", std::string(to_string(c.quantity))},
          {"all_matched", c.all_matched()},
          {"matched", matched},
          {"unmatched_expected", unmatched_expected},
          {"unmatched_dips", unmatched_dips}};
}

ordered_json to_json(const VerifyResult& v) {
  ordered_json worst = ordered_json::array();
  for (const auto& w : v.worst) {
    ordered_json coeffs = ordered_json::array();
    for (const auto& c : w.report.coefficients) {
      coeffs.push_back({{"name", std::string(c.name)},
                        {"closed_form", complex_json(c.closed_form)},
                        {"oracle", complex_json(c.oracle)},
                        {"abs_err", number(c.abs_err)},
                        {"rel_err", number(c.rel_err)}});
    }
    worst.push_back({{"index", w.index},
                     {"params", to_json(w.draw.params)},
                     {"delta_GHz", number(w.draw.delta)},
                     {"max_rel_err", number(w.report.max_rel_err)},
                     {"residual", number(w.report.max_residual)},
                     {"coefficients", coeffs}});
  }
  return {{"seed", v.seed},
          {"draws", v.draws},
          {"tolerance", number(v.tolerance)},
          {"passed", v.passed()},
          {"max_rel_err", number(v.max_rel_err)},
          {"max_abs_err", number(v.max_abs_err)},
          {"max_residual", number(v.max_residual)},
          {"worst", worst}};
}

}  // namespace wgm::report
