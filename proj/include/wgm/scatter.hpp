#pragma once

#include <complex>

#include "wgm/params.hpp"

namespace wgm {

using cplx = std::complex<double>;

/// Shared sub-expressions of the closed-form amplitudes at one detuning.
struct IntermediateTerms {
  cplx A, B;
  cplx CA_plus, CA_minus, CB_plus, CB_minus;
  cplx DA_plus, DA_minus, DB_plus, DB_minus;
  cplx phase2;  // e^{2i theta}
  cplx denom;
};

struct ScatteringAmplitudes {
  cplx r_f, r_b, t_f, t_b;
};

struct ScatteringPowers {
  double R_f = 0.0, R_b = 0.0, T_f = 0.0, T_b = 0.0;
  double contrast_R = 0.0, contrast_T = 0.0;
};

/// Quantities a spectrum or map can report.
enum class Quantity { R_f, R_b, T_f, T_b, contrast_R, contrast_T };

std::string_view to_string(Quantity q);
std::optional<Quantity> parse_quantity(std::string_view name);
double select(const ScatteringPowers& p, Quantity q);

/// Throws DegenerateDenominator when |denom| < 1e-300.
IntermediateTerms intermediate_terms(const SystemParams& params, double delta);

ScatteringAmplitudes amplitudes(const SystemParams& params, double delta);
ScatteringAmplitudes amplitudes(const SystemParams& params, const IntermediateTerms& terms);

ScatteringPowers powers(const ScatteringAmplitudes& amps);

inline ScatteringPowers evaluate(const SystemParams& params, double delta) {
  return powers(amplitudes(params, delta));
}

}  // namespace wgm
