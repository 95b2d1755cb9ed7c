#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "test_support.hpp"
#include "wgm/csv.hpp"
#include "wgm/sweep.hpp"

using namespace wgm;
using test::kPi;

namespace {

std::string csv_of(const SpectrumTable& t) {
  std::ostringstream os;
  write_csv(os, t);
  return os.str();
}

std::string csv_of(const GridTable& t) {
  std::ostringstream os;
  write_csv(os, t);
  return os.str();
}

std::vector<double> local_minima(const std::vector<double>& x, const std::vector<double>& y) {
  std::vector<double> out;
  for (std::size_t i = 1; i + 1 < y.size(); ++i) {
    if (y[i] < y[i - 1] && y[i] < y[i + 1]) out.push_back(x[i]);
  }
  return out;
}

bool has_near(const std::vector<double>& xs, double target, double tol) {
  return std::any_of(xs.begin(), xs.end(), [&](double x) { return std::abs(x - target) <= tol; });
}

}  // namespace

TEST_CASE("axis grid") {
  const AxisSpec a{Parameter::delta, -6.0, 6.0, 601};
  const auto v = a.values();
  CHECK(v.size() == 601);
  CHECK(v.front() == -6.0);
  CHECK(v.back() == 6.0);
  CHECK(v[300] == 0.0);

  const AxisSpec odd{Parameter::theta, 0.0, 2 * kPi, 7};
  CHECK(odd.values().back() == 2 * kPi);
  CHECK(AxisSpec{Parameter::eta, 0.1, 0.7, 3}.values().back() == 0.7);

  CHECK_THROWS_AS((AxisSpec{Parameter::delta, -1, 1, 1}.validate()), InvalidParams);
  CHECK_THROWS_AS((AxisSpec{Parameter::delta, 1, 1, 5}.validate()), InvalidParams);
  CHECK_THROWS_AS((AxisSpec{Parameter::delta, 1, -1, 5}.validate()), InvalidParams);
}

TEST_CASE("two-point sweep") {
  const auto t = sweep1d(SystemParams(test::reference(1.0)), {Parameter::delta, -1.0, 1.0, 2});
  CHECK(t.rows.size() == 2);
  CHECK(t.x == std::vector<double>{-1.0, 1.0});
}

TEST_CASE("weak coupling: reflection dips at the Zeeman positions") {
  const auto t = sweep1d(SystemParams(test::reference(1.0)), {Parameter::delta, -6.0, 6.0, 1201});
  const auto rf = local_minima(t.x, t.column(Quantity::R_f));
  const auto rb = local_minima(t.x, t.column(Quantity::R_b));
  CHECK(has_near(rf, -2.0, 0.15));
  CHECK(has_near(rf, 2.0, 0.15));
  CHECK(has_near(rb, -3.5, 0.15));
  CHECK(has_near(rb, 3.5, 0.15));
}

TEST_CASE("non-delta axis uses the fixed detuning") {
  const SystemParams base(test::reference(3.8));
  const auto t = sweep1d(base, {Parameter::eta, 0.5, 7.5, 15}, -2.0);
  for (std::size_t i = 0; i < t.x.size(); ++i) {
    const auto p = evaluate(base.with(Parameter::eta, t.x[i]), -2.0);
    CHECK(t.rows[i].T_f == p.T_f);
    CHECK(t.rows[i].R_b == p.R_b);
  }
}

TEST_CASE("parallel and serial sweeps are bit-identical") {
  const SystemParams base(test::reference(3.8));
  const AxisSpec axis{Parameter::delta, -6.0, 6.0, 1201};
  const auto serial = csv_of(sweep1d_serial(base, axis));
  for (int threads : {1, 2, 3, 8}) CHECK(csv_of(sweep1d(base, axis, 0.0, threads)) == serial);

  const AxisSpec theta{Parameter::theta, 0.0, 2 * kPi, 61};
  const AxisSpec delta{Parameter::delta, -6.0, 6.0, 121};
  const auto grid_serial = csv_of(sweep2d_serial(base, delta, theta, Quantity::R_f));
  for (int threads : {1, 4, 8}) CHECK(csv_of(sweep2d(base, delta, theta, Quantity::R_f, 0.0, threads)) == grid_serial);
}

TEST_CASE("map is row-major with axis1 outer") {
  const SystemParams base(test::reference(3.8));
  const AxisSpec delta{Parameter::delta, -3.0, 3.0, 5};
  const AxisSpec g{Parameter::g, 0.5, 1.5, 3};
  const auto t = sweep2d(base, delta, g, Quantity::T_b);
  REQUIRE(t.values.size() == 15);
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 3; ++j) {
      CHECK(t.at(i, j) == evaluate(base.with(Parameter::g, g.value(j)), delta.value(i)).T_b);
    }
  }
}

TEST_CASE("map validation") {
  const SystemParams base(test::reference(3.8));
  CHECK_THROWS_AS(sweep2d(base, {Parameter::delta, -1, 1, 1}, {Parameter::h, 0, 1, 2}, Quantity::R_f), InvalidParams);
  CHECK_THROWS_AS(sweep2d(base, {Parameter::delta, -1, 1, 3}, {Parameter::delta, 0, 1, 2}, Quantity::R_f),
                  InvalidParams);
}

TEST_CASE("eta map: forward transmission is low near -2 and -3.5 for strong coupling") {
  const SystemParams base(test::reference(3.8));
  const AxisSpec delta{Parameter::delta, -6.0, 6.0, 601};
  const AxisSpec eta{Parameter::eta, 4.72, 7.5, 25};
  const auto t = sweep2d(base, delta, eta, Quantity::T_f);
  const auto dx = delta.values();
  for (int j = 0; j < eta.count; ++j) {
    std::vector<double> column(delta.count);
    for (int i = 0; i < delta.count; ++i) column[i] = t.at(i, j);
    const auto minima = local_minima(dx, column);
    CHECK(has_near(minima, -2.0, 0.15));
    CHECK(has_near(minima, -3.5, 0.15));
    for (double pos : {-2.0, -3.5}) {
      const auto i = static_cast<int>(std::lround((pos + 6.0) / 0.02));
      CHECK(t.at(i, j) < 0.05);
    }
  }
}

TEST_CASE("h map: reflection vanishes as h -> 0") {
  const SystemParams base(test::reference(3.8));
  const AxisSpec delta{Parameter::delta, -6.0, 6.0, 601};
  const AxisSpec h{Parameter::h, 0.0, 0.6, 7};
  const auto t = sweep2d(base, delta, h, Quantity::R_f);
  double previous = -1.0;
  for (int j = 0; j < h.count; ++j) {
    double peak = 0.0;
    for (int i = 0; i < delta.count; ++i) peak = std::max(peak, t.at(i, j));
    CHECK(peak > previous);
    previous = peak;
    if (h.value(j) <= 0.2 + 1e-12) CHECK(peak < 0.05);
  }
}

TEST_CASE("failing grid points abort with their index") {
  // No QD, no loss, no backscattering: denom = A B vanishes where A = delta^2 = 0.
  const SystemParams dead({1.0, 0.0, 0.0, 0.0, 5.0, 0.0, 0.0});
  const AxisSpec axis{Parameter::delta, -1.0, 1.0, 3};
  for (int threads : {1, 4}) {
    try {
      sweep1d(dead, axis, 0.0, threads);
      FAIL("expected DegenerateDenominator");
    } catch (const DegenerateDenominator& e) {
      CHECK(std::string(e.what()).find("grid index 1") != std::string::npos);
    }
  }
  CHECK_THROWS_AS(sweep1d_serial(dead, axis), DegenerateDenominator);

  const SystemParams base(test::reference(1.0));
  try {
    sweep1d(base, {Parameter::eta, -1.0, 1.0, 5});
    FAIL("expected InvalidParams");
  } catch (const InvalidParams& e) {
    CHECK(std::string(e.what()).find("grid index 0") != std::string::npos);
  }
}
