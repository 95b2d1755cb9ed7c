#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "wgm/analysis.hpp"
#include "wgm/params.hpp"
#include "wgm/sweep.hpp"

namespace wgm::config {

/// Unreadable, malformed, incomplete or inconsistent configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

struct Entry {
  std::string value;
  std::string origin;  // "file:line" or "--set"
};

/// INI-style document: `[section]` headers, `key = value` lines, `#` or `;`
/// comments. Keys are validated against a fixed schema while parsing.
struct IniDocument {
  std::map<std::string, std::map<std::string, Entry>> sections;

  const Entry* find(const std::string& section, const std::string& key) const;
  bool has(const std::string& section, const std::string& key) const { return find(section, key) != nullptr; }
};

IniDocument parse_ini(std::istream& is, const std::string& source = "<config>");
IniDocument load_ini(const std::string& path);

/// Applies a `section.key=value` override. Throws ConfigError on bad syntax or
/// an unknown key.
void apply_override(IniDocument& doc, const std::string& assignment);

/// Parses a real number, optionally multiplied by π: "1.5", "pi", "-0.9pi",
/// "0.9*pi".
double parse_real(const std::string& text, const std::string& what);

enum class Command { spectrum, map, verify, analyze };

struct RunConfig {
  std::optional<SystemParams> system;

  AxisSpec axis;
  std::optional<AxisSpec> axis2;
  Quantity quantity = Quantity::R_f;
  double fixed_delta = 0.0;

  std::string input;
  double min_prominence = kDefaultMinProminence;
  double tolerance = 0.15;
  RegimeThresholds thresholds;
  std::optional<std::pair<double, double>> band;

  std::size_t draws = 0;
  std::uint64_t seed = 0;

  std::string csv_path;
  std::string svg_path;
  std::string json_path;
  bool timestamp = false;
};

/// Validates every field the command needs. Missing required keys are named
/// in the error message.
RunConfig build_run_config(const IniDocument& doc, Command command);

}  // namespace wgm::config
