#include "wgm/oracle.hpp"

#include <algorithm>
#include <cmath>

namespace wgm::oracle {

namespace {

constexpr cplx kI{0.0, 1.0};

// Resonator and exciton rows are shared by both directions; only the field
// terms (the fiber amplitude evaluated at each coupling point) differ.
void add_local_rows(Matrix& m, const SystemParams& p, double delta) {
  const cplx loss{0.0, -p.gamma()};
  const double g = p.g();
  const double h = p.h();

  // Resonator modes: -i gamma eps + g xi + h eps_partner + G Phi(x_j) = 0.
  // CCW mode a_j couples to the right-polarized exciton, CW mode b_j to the left.
  m(4, kEpsA1) = loss;
  m(4, kXiR1) = g;
  m(4, kEpsB1) = h;
  m(5, kEpsB1) = loss;
  m(5, kXiL1) = g;
  m(5, kEpsA1) = h;
  m(6, kEpsA2) = loss;
  m(6, kXiR2) = g;
  m(6, kEpsB2) = h;
  m(7, kEpsB2) = loss;
  m(7, kXiL2) = g;
  m(7, kEpsA2) = h;

  // Excitons at omega0 -/+ omega_j: (omega0 -/+ omega_j - i gamma - omega) xi + g eps = 0.
  const double w[2] = {p.omega1(), p.omega2()};
  const std::size_t xi_r[2] = {kXiR1, kXiR2};
  const std::size_t xi_l[2] = {kXiL1, kXiL2};
  const std::size_t eps_a[2] = {kEpsA1, kEpsA2};
  const std::size_t eps_b[2] = {kEpsB1, kEpsB2};
  for (std::size_t j = 0; j < 2; ++j) {
    const std::size_t row_r = 8 + 2 * j;
    const std::size_t row_l = 9 + 2 * j;
    m(row_r, xi_r[j]) = cplx(-delta - w[j], -p.gamma());
    m(row_r, eps_a[j]) = g;
    m(row_l, xi_l[j]) = cplx(-delta + w[j], -p.gamma());
    m(row_l, eps_b[j]) = g;
  }
}

}  // namespace

double coupling_from_eta(double eta) { return std::sqrt(2.0 * eta); }

LinearSystem build_system(const SystemParams& params, double delta, Direction dir) {
  LinearSystem sys;
  Matrix& m = sys.matrix;
  Vector& b = sys.rhs;
  const double G = coupling_from_eta(params.eta());
  const cplx ph = std::polar(1.0, params.theta());  // e^{i theta}
  const cplx phc = std::conj(ph);
  const double half = 0.5 * G;

  add_local_rows(m, params, delta);

  if (dir == Direction::Forward) {
    // Phi_R = e^{ikx}[th(-x) + a th(x)th(d-x) + t th(x-d)]
    // Phi_L = e^{-ikx}[r th(-x) + b th(x)th(d-x)]
    // Jumps: -i [Phi_R] + G eps_a = 0, +i [Phi_L] + G eps_b = 0.
    m(0, kA) = -kI;
    m(0, kEpsA1) = G;
    b[0] = -kI;
    m(1, kT) = -kI * ph;
    m(1, kA) = kI * ph;
    m(1, kEpsA2) = G;
    m(2, kB) = kI;
    m(2, kR) = -kI;
    m(2, kEpsB1) = G;
    m(3, kB) = -kI * phc;
    m(3, kEpsB2) = G;

    // Field at each coupling point, midpoint of the two one-sided limits.
    m(4, kA) += half;
    b[4] -= half;
    m(5, kR) += half;
    m(5, kB) += half;
    m(6, kA) += half * ph;
    m(6, kT) += half * ph;
    m(7, kB) += half * phc;
  } else {
    // Mirror image with phases referenced at x = d:
    // Phi_L = e^{-ik(x-d)}[th(x-d) + b th(x)th(d-x) + t th(-x)]
    // Phi_R = e^{ik(x-d)}[a th(x)th(d-x) + r th(x-d)]
    m(0, kA) = -kI * phc;
    m(0, kEpsA1) = G;
    m(1, kR) = -kI;
    m(1, kA) = kI;
    m(1, kEpsA2) = G;
    m(2, kB) = kI * ph;
    m(2, kT) = -kI * ph;
    m(2, kEpsB1) = G;
    m(3, kB) = -kI;
    m(3, kEpsB2) = G;
    b[3] = -kI;

    m(4, kA) += half * phc;
    m(5, kB) += half * ph;
    m(5, kT) += half * ph;
    m(6, kA) += half;
    m(6, kR) += half;
    m(7, kB) += half;
    b[7] -= half;
  }
  return sys;
}

OracleSolution oracle_solve(const SystemParams& params, double delta, Direction dir) {
  const LinearSystem sys = build_system(params, delta, dir);
  Vector x{};
  if (!solve_dense(sys.matrix, sys.rhs, x)) {
    throw SingularSystem("oracle linear system is singular at delta=" + std::to_string(delta));
  }
  OracleSolution s;
  s.r = x[kR];
  s.t = x[kT];
  s.a = x[kA];
  s.b = x[kB];
  s.eps_a1 = x[kEpsA1];
  s.eps_b1 = x[kEpsB1];
  s.eps_a2 = x[kEpsA2];
  s.eps_b2 = x[kEpsB2];
  s.xi_L1 = x[kXiL1];
  s.xi_R1 = x[kXiR1];
  s.xi_L2 = x[kXiL2];
  s.xi_R2 = x[kXiR2];
  s.residual = max_residual(sys.matrix, sys.rhs, x);
  return s;
}

double relative_error(cplx reference, cplx value) {
  const double scale = std::max({std::abs(reference), std::abs(value), kRelFloor});
  return std::abs(reference - value) / scale;
}

DiscrepancyReport compare(const SystemParams& params, double delta) {
  const ScatteringAmplitudes closed = amplitudes(params, delta);
  DiscrepancyReport rep;
  rep.forward = oracle_solve(params, delta, Direction::Forward);
  rep.backward = oracle_solve(params, delta, Direction::Backward);

  rep.coefficients = {{
      {"r_f", closed.r_f, rep.forward.r},
      {"r_b", closed.r_b, rep.backward.r},
      {"t_f", closed.t_f, rep.forward.t},
      {"t_b", closed.t_b, rep.backward.t},
  }};
  for (auto& c : rep.coefficients) {
    c.abs_err = std::abs(c.closed_form - c.oracle);
    c.rel_err = relative_error(c.closed_form, c.oracle);
    rep.max_abs_err = std::max(rep.max_abs_err, c.abs_err);
    rep.max_rel_err = std::max(rep.max_rel_err, c.rel_err);
  }
  rep.max_residual = std::max(rep.forward.residual, rep.backward.residual);

  if (params.gamma() == 0.0) {
    const ScatteringPowers pw = powers(closed);
    rep.flux_deviation = std::max(std::abs(pw.R_f + pw.T_f - 1.0), std::abs(pw.R_b + pw.T_b - 1.0));
  }
  return rep;
}

}  // namespace wgm::oracle
