#pragma once

#include <algorithm>
#include <array>
#include <complex>
#include <cstddef>
#include <utility>

namespace wgm {

/// Fixed-size dense complex matrix, row-major.
template <std::size_t N>
struct DenseMatrix {
  std::array<std::complex<double>, N * N> data{};

  std::complex<double>& operator()(std::size_t i, std::size_t j) { return data[i * N + j]; }
  const std::complex<double>& operator()(std::size_t i, std::size_t j) const { return data[i * N + j]; }
};

template <std::size_t N>
using DenseVector = std::array<std::complex<double>, N>;

/// Gaussian elimination with partial pivoting (largest modulus in the column).
/// Returns false if a pivot has modulus below `pivot_floor`.
template <std::size_t N>
bool solve_dense(DenseMatrix<N> m, DenseVector<N> b, DenseVector<N>& x, double pivot_floor = 1e-300) {
  for (std::size_t k = 0; k < N; ++k) {
    std::size_t piv = k;
    double best = std::abs(m(k, k));
    for (std::size_t i = k + 1; i < N; ++i) {
      const double v = std::abs(m(i, k));
      if (v > best) {
        best = v;
        piv = i;
      }
    }
    if (!(best >= pivot_floor)) return false;
    if (piv != k) {
      for (std::size_t j = 0; j < N; ++j) std::swap(m(k, j), m(piv, j));
      std::swap(b[k], b[piv]);
    }
    for (std::size_t i = k + 1; i < N; ++i) {
      const auto f = m(i, k) / m(k, k);
      if (f == std::complex<double>{}) continue;
      m(i, k) = {};
      for (std::size_t j = k + 1; j < N; ++j) m(i, j) -= f * m(k, j);
      b[i] -= f * b[k];
    }
  }
  for (std::size_t ii = N; ii-- > 0;) {
    auto s = b[ii];
    for (std::size_t j = ii + 1; j < N; ++j) s -= m(ii, j) * x[j];
    x[ii] = s / m(ii, ii);
  }
  return true;
}

/// max_i |(m x - b)_i|
template <std::size_t N>
double max_residual(const DenseMatrix<N>& m, const DenseVector<N>& b, const DenseVector<N>& x) {
  double worst = 0.0;
  for (std::size_t i = 0; i < N; ++i) {
    std::complex<double> s = -b[i];
    for (std::size_t j = 0; j < N; ++j) s += m(i, j) * x[j];
    worst = std::max(worst, std::abs(s));
  }
  return worst;
}

}  // namespace wgm
