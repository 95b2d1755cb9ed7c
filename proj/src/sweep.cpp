#include "wgm/sweep.hpp"

#include <omp.h>

#include <algorithm>
#include <cstddef>
#include <string>

#include "wgm/version.hpp"

namespace wgm {

namespace {

struct Point {
  SystemParams params;
  double delta;
};

Point point_at(const SystemParams& base, Parameter p, double value, double delta) {
  if (p == Parameter::delta) return {base, value};
  return {base.with(p, value), delta};
}

Point point_at(const SystemParams& base, Parameter p1, double v1, Parameter p2, double v2, double delta) {
  Point pt = point_at(base, p1, v1, delta);
  return point_at(pt.params, p2, v2, pt.delta);
}

// Re-evaluates a failed grid point outside the parallel region so the original
// exception type is rethrown with the grid index attached.
template <typename Eval>
[[noreturn]] void rethrow_at(std::size_t index, Eval&& eval) {
  const std::string where = " (grid index " + std::to_string(index) + ")";
  try {
    eval();
  } catch (const DegenerateDenominator& e) {
    throw DegenerateDenominator(e.what() + where);
  } catch (const InvalidParams& e) {
    throw InvalidParams(e.what() + where);
  }
  throw NumericalError("grid point failed" + where);
}

void validate_pair(const AxisSpec& a1, const AxisSpec& a2) {
  a1.validate();
  a2.validate();
  if (a1.param == a2.param) {
    throw InvalidParams("map axes must scan different parameters, both are " + std::string(to_string(a1.param)));
  }
}

SpectrumTable make_spectrum(const SystemParams& base, const AxisSpec& axis, double fixed_delta) {
  axis.validate();
  SpectrumTable t{axis, fixed_delta, base, axis.values(), {}, default_provenance()};
  t.rows.resize(t.x.size());
  return t;
}

GridTable make_grid(const SystemParams& base, const AxisSpec& a1, const AxisSpec& a2, Quantity q,
                    double fixed_delta) {
  validate_pair(a1, a2);
  GridTable t{a1, a2, q, fixed_delta, base, {}, default_provenance()};
  t.values.resize(static_cast<std::size_t>(a1.count) * a2.count);
  return t;
}

}  // namespace

void AxisSpec::validate() const {
  if (count < 2) {
    throw InvalidParams("axis " + std::string(to_string(param)) + ": count must be >= 2, got " +
                        std::to_string(count));
  }
  if (!(stop > start)) {
    throw InvalidParams("axis " + std::string(to_string(param)) + ": stop must exceed start");
  }
}

double AxisSpec::value(int i) const {
  if (i == count - 1) return stop;
  return start + i * (stop - start) / (count - 1);
}

std::vector<double> AxisSpec::values() const {
  std::vector<double> v(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) v[i] = value(i);
  return v;
}

Provenance default_provenance() { return {std::string(kToolVersion), {}}; }

std::vector<double> SpectrumTable::column(Quantity q) const {
  std::vector<double> out(rows.size());
  std::transform(rows.begin(), rows.end(), out.begin(), [q](const ScatteringPowers& p) { return select(p, q); });
  return out;
}

int resolve_threads(int threads) { return threads > 0 ? threads : omp_get_max_threads(); }

SpectrumTable sweep1d_serial(const SystemParams& base, const AxisSpec& axis, double fixed_delta) {
  SpectrumTable t = make_spectrum(base, axis, fixed_delta);
  for (std::size_t i = 0; i < t.x.size(); ++i) {
    try {
      const Point pt = point_at(base, axis.param, t.x[i], fixed_delta);
      t.rows[i] = evaluate(pt.params, pt.delta);
    } catch (const Error&) {
      rethrow_at(i, [&] {
        const Point pt = point_at(base, axis.param, t.x[i], fixed_delta);
        evaluate(pt.params, pt.delta);
      });
    }
  }
  return t;
}

SpectrumTable sweep1d(const SystemParams& base, const AxisSpec& axis, double fixed_delta, int threads) {
  SpectrumTable t = make_spectrum(base, axis, fixed_delta);
  const auto n = static_cast<std::ptrdiff_t>(t.x.size());
  std::ptrdiff_t first_failure = n;

#pragma omp parallel for num_threads(resolve_threads(threads)) schedule(static) reduction(min : first_failure)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      const Point pt = point_at(base, axis.param, t.x[i], fixed_delta);
      t.rows[i] = evaluate(pt.params, pt.delta);
    } catch (...) {
      first_failure = std::min(first_failure, i);
    }
  }

  if (first_failure < n) {
    const auto i = static_cast<std::size_t>(first_failure);
    rethrow_at(i, [&] {
      const Point pt = point_at(base, axis.param, t.x[i], fixed_delta);
      evaluate(pt.params, pt.delta);
    });
  }
  return t;
}

GridTable sweep2d_serial(const SystemParams& base, const AxisSpec& axis1, const AxisSpec& axis2,
                         Quantity quantity, double fixed_delta) {
  GridTable t = make_grid(base, axis1, axis2, quantity, fixed_delta);
  const auto v1 = axis1.values();
  const auto v2 = axis2.values();
  const auto eval = [&](std::size_t i, std::size_t j) {
    const Point pt = point_at(base, axis1.param, v1[i], axis2.param, v2[j], fixed_delta);
    return select(evaluate(pt.params, pt.delta), quantity);
  };
  for (std::size_t i = 0; i < v1.size(); ++i) {
    for (std::size_t j = 0; j < v2.size(); ++j) {
      try {
        t.values[i * v2.size() + j] = eval(i, j);
      } catch (const Error&) {
        rethrow_at(i * v2.size() + j, [&] { eval(i, j); });
      }
    }
  }
  return t;
}

GridTable sweep2d(const SystemParams& base, const AxisSpec& axis1, const AxisSpec& axis2, Quantity quantity,
                  double fixed_delta, int threads) {
  GridTable t = make_grid(base, axis1, axis2, quantity, fixed_delta);
  const auto v1 = axis1.values();
  const auto v2 = axis2.values();
  const auto cols = static_cast<std::ptrdiff_t>(v2.size());
  const auto n = static_cast<std::ptrdiff_t>(t.values.size());
  const auto eval = [&](std::ptrdiff_t k) {
    const Point pt = point_at(base, axis1.param, v1[k / cols], axis2.param, v2[k % cols], fixed_delta);
    return select(evaluate(pt.params, pt.delta), quantity);
  };
  std::ptrdiff_t first_failure = n;

#pragma omp parallel for num_threads(resolve_threads(threads)) schedule(static) reduction(min : first_failure)
  for (std::ptrdiff_t k = 0; k < n; ++k) {
    try {
      t.values[k] = eval(k);
    } catch (...) {
      first_failure = std::min(first_failure, k);
    }
  }

  if (first_failure < n) {
    rethrow_at(static_cast<std::size_t>(first_failure), [&] { eval(first_failure); });
  }
  return t;
}

}  // namespace wgm
