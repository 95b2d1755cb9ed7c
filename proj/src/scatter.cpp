#include "wgm/scatter.hpp"

#include <array>
#include <cmath>
#include <utility>

namespace wgm {

namespace {

constexpr std::array<std::pair<Quantity, std::string_view>, 6> kQuantityNames{{
    {Quantity::R_f, "R_f"},
    {Quantity::R_b, "R_b"},
    {Quantity::T_f, "T_f"},
    {Quantity::T_b, "T_b"},
    {Quantity::contrast_R, "contrast_R"},
    {Quantity::contrast_T, "contrast_T"},
}};

constexpr double kDenomFloor = 1e-300;

// C^X_± = -g^4 + X [h^2 + (gamma ± eta)^2] + 2i g^2 (delta + i gamma)(gamma ± eta)
cplx c_term(cplx X, double g2, double h, double gamma_pm_eta, cplx z) {
  const double s = gamma_pm_eta;
  return -g2 * g2 + X * (h * h + s * s) + cplx(0.0, 2.0 * g2) * z * s;
}

// D^X_± = g^4 - X (h^2 + gamma^2 - eta^2) - 2i g^2 (delta gamma + i gamma^2 ± eta omega_j)
cplx d_term(cplx X, double g2, double h, double gamma, double eta, double delta, double pm_eta_omega) {
  const cplx inner(delta * gamma + pm_eta_omega, gamma * gamma);
  return g2 * g2 - X * (h * h + gamma * gamma - eta * eta) - cplx(0.0, 2.0 * g2) * inner;
}

}  // namespace

std::string_view to_string(Quantity q) {
  for (const auto& [quantity, name] : kQuantityNames) {
    if (quantity == q) return name;
  }
  return "?";
}

std::optional<Quantity> parse_quantity(std::string_view name) {
  for (const auto& [quantity, n] : kQuantityNames) {
    if (n == name) return quantity;
  }
  return std::nullopt;
}

double select(const ScatteringPowers& p, Quantity q) {
  switch (q) {
    case Quantity::R_f: return p.R_f;
    case Quantity::R_b: return p.R_b;
    case Quantity::T_f: return p.T_f;
    case Quantity::T_b: return p.T_b;
    case Quantity::contrast_R: return p.contrast_R;
    case Quantity::contrast_T: return p.contrast_T;
  }
  return 0.0;
}

IntermediateTerms intermediate_terms(const SystemParams& params, double delta) {
  const double eta = params.eta();
  const double g2 = params.g() * params.g();
  const double h = params.h();
  const double gamma = params.gamma();
  const double w1 = params.omega1();
  const double w2 = params.omega2();

  const cplx z(delta, gamma);
  IntermediateTerms t;
  t.A = z * z - w1 * w1;
  t.B = z * z - w2 * w2;
  t.CA_plus = c_term(t.A, g2, h, gamma + eta, z);
  t.CA_minus = c_term(t.A, g2, h, gamma - eta, z);
  t.CB_plus = c_term(t.B, g2, h, gamma + eta, z);
  t.CB_minus = c_term(t.B, g2, h, gamma - eta, z);
  t.DA_plus = d_term(t.A, g2, h, gamma, eta, delta, eta * w1);
  t.DA_minus = d_term(t.A, g2, h, gamma, eta, delta, -eta * w1);
  t.DB_plus = d_term(t.B, g2, h, gamma, eta, delta, eta * w2);
  t.DB_minus = d_term(t.B, g2, h, gamma, eta, delta, -eta * w2);
  // theta is deliberately not reduced modulo 2π; std::polar is exactly periodic
  // up to the rounding of 2θ itself.
  t.phase2 = std::polar(1.0, 2.0 * params.theta());
  t.denom = 4.0 * t.A * t.B * t.phase2 * (h * h * eta * eta) + t.CA_plus * t.CB_plus;

  if (!(std::abs(t.denom) >= kDenomFloor)) {
    throw DegenerateDenominator("scattering denominator vanishes at delta=" + std::to_string(delta));
  }
  return t;
}

ScatteringAmplitudes amplitudes(const SystemParams& params, const IntermediateTerms& t) {
  const cplx pref(0.0, 2.0 * params.h() * params.eta());
  ScatteringAmplitudes a;
  a.r_f = pref * (t.B * t.phase2 * t.CA_minus + t.A * t.CB_plus) / t.denom;
  a.r_b = pref * (t.A * t.phase2 * t.CB_minus + t.B * t.CA_plus) / t.denom;
  a.t_f = t.DA_minus * t.DB_minus / t.denom;
  a.t_b = t.DA_plus * t.DB_plus / t.denom;
  return a;
}

ScatteringAmplitudes amplitudes(const SystemParams& params, double delta) {
  return amplitudes(params, intermediate_terms(params, delta));
}

ScatteringPowers powers(const ScatteringAmplitudes& amps) {
  ScatteringPowers p;
  p.R_f = std::norm(amps.r_f);
  p.R_b = std::norm(amps.r_b);
  p.T_f = std::norm(amps.t_f);
  p.T_b = std::norm(amps.t_b);
  p.contrast_R = std::abs(p.R_f - p.R_b);
  p.contrast_T = std::abs(p.T_f - p.T_b);
  return p;
}

}  // namespace wgm
