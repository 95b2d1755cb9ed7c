#include "wgm/params.hpp"

#include <array>
#include <cmath>
#include <string>
#include <utility>

namespace wgm {

namespace {

constexpr std::array<std::pair<Parameter, std::string_view>, 8> kNames{{
    {Parameter::delta, "delta"},
    {Parameter::theta, "theta"},
    {Parameter::eta, "eta"},
    {Parameter::g, "g"},
    {Parameter::h, "h"},
    {Parameter::omega1, "omega1"},
    {Parameter::omega2, "omega2"},
    {Parameter::gamma, "gamma"},
}};

void require_finite(double v, std::string_view name) {
  if (!std::isfinite(v)) {
    throw InvalidParams(std::string(name) + " must be finite");
  }
}

void require_rate(double v, std::string_view name) {
  require_finite(v, name);
  if (v < 0.0) {
    throw InvalidParams(std::string(name) + " must be non-negative, got " + std::to_string(v));
  }
}

}  // namespace

std::string_view to_string(Parameter p) {
  for (const auto& [param, name] : kNames) {
    if (param == p) return name;
  }
  return "?";
}

std::optional<Parameter> parse_parameter(std::string_view name) {
  for (const auto& [param, n] : kNames) {
    if (n == name) return param;
  }
  return std::nullopt;
}

std::string_view unit_of(Parameter p) { return p == Parameter::theta ? "rad" : "GHz"; }

SystemParams::SystemParams(const RawParams& raw) : raw_(raw) {
  require_rate(raw.eta, "eta");
  require_rate(raw.g, "g");
  require_rate(raw.h, "h");
  require_rate(raw.gamma, "gamma");
  require_finite(raw.omega1, "omega1");
  require_finite(raw.omega2, "omega2");
  require_finite(raw.theta, "theta");
}

SystemParams SystemParams::from_coupling(double G, double v_g, RawParams rest) {
  rest.eta = eta_from_raw(G, v_g);
  return SystemParams(rest);
}

SystemParams SystemParams::with(Parameter p, double value) const {
  RawParams r = raw_;
  switch (p) {
    case Parameter::theta: r.theta = value; break;
    case Parameter::eta: r.eta = value; break;
    case Parameter::g: r.g = value; break;
    case Parameter::h: r.h = value; break;
    case Parameter::omega1: r.omega1 = value; break;
    case Parameter::omega2: r.omega2 = value; break;
    case Parameter::gamma: r.gamma = value; break;
    case Parameter::delta: throw InvalidParams("delta is not a system parameter");
  }
  return SystemParams(r);
}

double SystemParams::get(Parameter p) const {
  switch (p) {
    case Parameter::theta: return raw_.theta;
    case Parameter::eta: return raw_.eta;
    case Parameter::g: return raw_.g;
    case Parameter::h: return raw_.h;
    case Parameter::omega1: return raw_.omega1;
    case Parameter::omega2: return raw_.omega2;
    case Parameter::gamma: return raw_.gamma;
    case Parameter::delta: break;
  }
  throw InvalidParams("delta is not a system parameter");
}

double eta_from_raw(double G, double v_g) {
  if (!(v_g > 0.0)) {
    throw NonpositiveVelocity("group velocity v_g must be positive, got " + std::to_string(v_g));
  }
  return G * G / v_g;
}

}  // namespace wgm
