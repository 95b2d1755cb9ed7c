#include <doctest.h>

#include <cmath>

#include "test_support.hpp"
#include "wgm/scatter.hpp"

using namespace wgm;
using test::kPi;

namespace {

void check_close(cplx actual, double re, double im, double tol = 1e-12) {
  const cplx expected(re, im);
  CHECK(std::abs(actual - expected) <= tol * std::max(1.0, std::abs(expected)));
}

}  // namespace

TEST_CASE("SystemParams rejects negative rates and non-finite values") {
  CHECK_THROWS_AS(SystemParams({-0.1, 1, 1, 2, 3.5, 0.2, 0}), InvalidParams);
  CHECK_THROWS_AS(SystemParams({1, -1, 1, 2, 3.5, 0.2, 0}), InvalidParams);
  CHECK_THROWS_AS(SystemParams({1, 1, -1, 2, 3.5, 0.2, 0}), InvalidParams);
  CHECK_THROWS_AS(SystemParams({1, 1, 1, 2, 3.5, -0.2, 0}), InvalidParams);
  CHECK_THROWS_AS(SystemParams({1, 1, 1, NAN, 3.5, 0.2, 0}), InvalidParams);
  CHECK_THROWS_AS(SystemParams({1, 1, 1, 2, 3.5, 0.2, INFINITY}), InvalidParams);
  CHECK_NOTHROW(SystemParams({1, 1, 1, -2, -3.5, 0.2, 7 * kPi}));

  const SystemParams p(test::reference(3.8));
  CHECK(p.with(Parameter::eta, 6.0).eta() == 6.0);
  CHECK(p.with(Parameter::eta, 6.0).g() == 1.0);
  CHECK_THROWS_AS(p.with(Parameter::delta, 0.0), InvalidParams);
  CHECK_THROWS_AS(p.with(Parameter::h, -1.0), InvalidParams);
}

TEST_CASE("eta_from_raw") {
  CHECK(eta_from_raw(0.0, 1.0) == 0.0);
  CHECK(eta_from_raw(2.0, 4.0) == 1.0);
  CHECK_THROWS_AS(eta_from_raw(1.0, 0.0), NonpositiveVelocity);
  CHECK_THROWS_AS(eta_from_raw(1.0, -2.0), NonpositiveVelocity);

  // G quoted in angular units gives angular eta; dividing by 2π returns the
  // cyclic value used everywhere else.
  for (double v_g : {0.3, 1.0, 250.0}) {
    const double G = std::sqrt(2 * kPi * 3.8 * v_g);
    CHECK(eta_from_raw(G, v_g) / (2 * kPi) == doctest::Approx(3.8).epsilon(1e-14));
  }
  const auto p = SystemParams::from_coupling(2.0, 4.0, test::reference(0.0));
  CHECK(p.eta() == 1.0);
}

TEST_CASE("intermediate terms reduce without QD, backscattering and loss") {
  const SystemParams p({1.0, 0.0, 0.0, 1.3, -2.4, 0.0, 0.4});
  const auto t = intermediate_terms(p, 0.7);
  const double eta2 = 1.0;
  CHECK(t.CA_plus == t.A * eta2);
  CHECK(t.DA_minus == t.A * eta2);
  CHECK(std::abs(t.denom - t.A * t.B * eta2 * eta2) <= 1e-15 * std::abs(t.denom));
}

TEST_CASE("A equals B when the Zeeman splittings coincide") {
  const auto t = intermediate_terms(SystemParams({2.3, 0.7, 1.1, 2.0, 2.0, 0.3, 1.0}), -1.4);
  CHECK(t.A == t.B);
  const auto u = intermediate_terms(SystemParams({2.3, 0.7, 1.1, 2.0, -2.0, 0.3, 1.0}), -1.4);
  CHECK(u.A == u.B);
}

TEST_CASE("intermediate terms at eta = 3.8, delta = -2") {
  // Frozen from an independent numpy evaluation of the same closed forms; the
  // oracle tests tie these formulas to the linear-system solve.
  const auto t = intermediate_terms(SystemParams(test::reference(3.8)), -2.0);
  check_close(t.A, -0.04, -0.8);
  check_close(t.B, -8.29, -0.8);
  check_close(t.CA_plus, -3.28, -29.6);
  check_close(t.CA_minus, -0.1184, 3.232);
  check_close(t.CB_plus, -143.53, -29.6);
  check_close(t.CB_minus, -115.2884, 3.232);
  check_close(t.DA_plus, 0.544, -25.12);
  check_close(t.DA_minus, 0.544, 5.28);
  check_close(t.DB_plus, -110.006, -36.52);
  check_close(t.DB_minus, -110.006, 16.68);
  check_close(t.denom, -423.194784, 4730.48864);

  const auto a = amplitudes(SystemParams(test::reference(3.8)), -2.0);
  check_close(a.r_f, -0.010171815897604722, 0.14439447072251602);
  check_close(a.r_b, 0.06556259600453296, 0.5405543042051112);
  check_close(a.t_f, -0.11713180857164507, 0.04174689962430745);
  check_close(a.t_b, 0.593687261763572, 0.15346835533134556);
}

TEST_CASE("degenerate denominator is reported, not returned as inf") {
  // Nothing couples and nothing decays: A = 0 at delta = omega1 = 0.
  const SystemParams p({0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0});
  CHECK_THROWS_AS(amplitudes(p, 0.0), DegenerateDenominator);
}

TEST_CASE("powers") {
  const auto p = powers({0.0, 0.0, cplx(0, 1), cplx(0, -1)});
  CHECK(p.R_f == 0.0);
  CHECK(p.R_b == 0.0);
  CHECK(p.T_f == 1.0);
  CHECK(p.T_b == 1.0);
  CHECK(p.contrast_R == 0.0);
  CHECK(p.contrast_T == 0.0);

  const auto q = powers({cplx(0.6, 0.0), cplx(0.0, 0.3), cplx(0.1, 0.2), 0.5});
  CHECK(q.R_f == doctest::Approx(0.36));
  CHECK(q.R_b == doctest::Approx(0.09));
  CHECK(q.T_f == doctest::Approx(0.05));
  CHECK(q.contrast_R == doctest::Approx(0.27));
  CHECK(q.contrast_T == doctest::Approx(0.2));
}

TEST_CASE("dual-band UT at eta = 3.8, delta = -2") {
  const auto p = evaluate(SystemParams(test::reference(3.8)), -2.0);
  CHECK(p.T_f < 0.05);
  CHECK(p.T_b - p.T_f > 0.3);
}

TEST_CASE("property: exact symmetry identities") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    RawParams raw = test::random_raw(rng);
    const double delta = test::random_delta(rng);

    RawParams no_h = raw;
    no_h.h = 0.0;
    const auto a0 = amplitudes(SystemParams(no_h), delta);
    CHECK(a0.r_f == cplx(0.0));
    CHECK(a0.r_b == cplx(0.0));

    RawParams same = raw;
    same.omega2 = (i % 2 ? -1.0 : 1.0) * same.omega1;
    const auto a1 = amplitudes(SystemParams(same), delta);
    CHECK(std::abs(a1.r_f - a1.r_b) <= 1e-12);

    RawParams zero = raw;
    zero.omega1 = zero.omega2 = 0.0;
    const auto a2 = amplitudes(SystemParams(zero), delta);
    CHECK(std::abs(a2.t_f - a2.t_b) <= 1e-12);

    RawParams shifted = raw;
    shifted.theta += 2 * kPi;
    const auto b0 = amplitudes(SystemParams(raw), delta);
    const auto b1 = amplitudes(SystemParams(shifted), delta);
    CHECK(test::rel_diff(b0.r_f, b1.r_f) <= 1e-12);
    CHECK(test::rel_diff(b0.r_b, b1.r_b) <= 1e-12);
    CHECK(test::rel_diff(b0.t_f, b1.t_f) <= 1e-12);
    CHECK(test::rel_diff(b0.t_b, b1.t_b) <= 1e-12);
  }
}

TEST_CASE("property: denominator is invariant under omega1 <-> omega2") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    RawParams raw = test::random_raw(rng);
    const double delta = test::random_delta(rng);
    RawParams swapped = raw;
    std::swap(swapped.omega1, swapped.omega2);
    const cplx d1 = intermediate_terms(SystemParams(raw), delta).denom;
    const cplx d2 = intermediate_terms(SystemParams(swapped), delta).denom;
    CHECK(std::abs(d1 - d2) <= 1e-12 * std::abs(d1));
  }
}

TEST_CASE("property: lossless scattering conserves flux") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 1000; ++i) {
    RawParams raw = test::random_raw(rng);
    raw.gamma = 0.0;
    const auto p = evaluate(SystemParams(raw), test::random_delta(rng));
    CHECK(std::abs(p.R_f + p.T_f - 1.0) <= 1e-10);
    CHECK(std::abs(p.R_b + p.T_b - 1.0) <= 1e-10);
  }
}

TEST_CASE("quantity names round-trip") {
  for (Quantity q : {Quantity::R_f, Quantity::R_b, Quantity::T_f, Quantity::T_b, Quantity::contrast_R,
                     Quantity::contrast_T}) {
    CHECK(parse_quantity(to_string(q)) == q);
  }
  CHECK_FALSE(parse_quantity("R").has_value());
  CHECK(parse_parameter("omega2") == Parameter::omega2);
  CHECK_FALSE(parse_parameter("Delta").has_value());
}
