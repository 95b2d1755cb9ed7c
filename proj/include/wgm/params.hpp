#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace wgm {

/// Base class for every error raised by the library. The CLI maps subclasses
/// of NumericalError to exit code 3 and everything else to exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parameter values outside their physical domain.
class InvalidParams : public Error {
 public:
  using Error::Error;
};

class NumericalError : public Error {
 public:
  using Error::Error;
};

class DegenerateDenominator : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class SingularSystem : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class NonpositiveVelocity : public InvalidParams {
 public:
  using InvalidParams::InvalidParams;
};

/// Unvalidated parameter values. Frequencies are cyclic (value/2π) in GHz,
/// theta is in radians.
struct RawParams {
  double eta = 0.0;
  double g = 0.0;
  double h = 0.0;
  double omega1 = 0.0;
  double omega2 = 0.0;
  double gamma = 0.0;
  double theta = 0.0;
};

/// Anything a sweep axis can scan. Delta is the detuning of the incident
/// photon and is not part of SystemParams.
enum class Parameter { delta, theta, eta, g, h, omega1, omega2, gamma };

std::string_view to_string(Parameter p);
std::optional<Parameter> parse_parameter(std::string_view name);
/// Unit suffix used in CSV headers and metadata ("GHz" or "rad").
std::string_view unit_of(Parameter p);

/// Validated, immutable physical parameter set of the two-resonator system.
///
/// All rates share one frequency unit. The scattering amplitudes are ratios of
/// polynomials of equal total frequency degree (8 over 8), so scaling every
/// rate and the detuning by 2π leaves them unchanged; cyclic GHz can therefore
/// be used directly without 2π factors anywhere.
class SystemParams {
 public:
  /// Throws InvalidParams on negative rates (eta, g, h, gamma) or non-finite
  /// values. The Zeeman half-splittings omega1/omega2 may have either sign.
  explicit SystemParams(const RawParams& raw);

  /// Builds eta from the raw resonator-fiber coupling G and group velocity v_g.
  static SystemParams from_coupling(double G, double v_g, RawParams rest);

  double eta() const { return raw_.eta; }
  double g() const { return raw_.g; }
  double h() const { return raw_.h; }
  double omega1() const { return raw_.omega1; }
  double omega2() const { return raw_.omega2; }
  double gamma() const { return raw_.gamma; }
  double theta() const { return raw_.theta; }
  const RawParams& raw() const { return raw_; }

  /// Copy with one field replaced. Throws for Parameter::delta.
  SystemParams with(Parameter p, double value) const;
  double get(Parameter p) const;

 private:
  RawParams raw_;
};

/// eta = G^2 / v_g.
double eta_from_raw(double G, double v_g);

}  // namespace wgm
