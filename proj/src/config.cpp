#include "wgm/config.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <fstream>
#include <numbers>
#include <set>
#include <string_view>

namespace wgm::config {

namespace {

const std::map<std::string, std::set<std::string>>& schema() {
  static const std::map<std::string, std::set<std::string>> s{
      {"system", {"eta", "G", "v_g", "g", "h", "omega1", "omega2", "gamma", "theta"}},
      {"sweep", {"axis", "start", "stop", "count", "axis2", "start2", "stop2", "count2", "quantity", "fixed_delta"}},
      {"analysis", {"input", "min_prominence", "tolerance", "tau_R", "tau_T", "band_min", "band_max"}},
      {"verify", {"draws", "seed"}},
      {"output", {"csv", "svg", "json", "timestamp"}},
  };
  return s;
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

void check_known(const std::string& section, const std::string& key, const std::string& origin) {
  const auto it = schema().find(section);
  if (it == schema().end()) throw ConfigError(origin + ": unknown section [" + section + "]");
  if (!it->second.contains(key)) throw ConfigError(origin + ": unknown key '" + key + "' in [" + section + "]");
}

// Strips a trailing comment introduced by '#' or ';' preceded by whitespace.
std::string strip_comment(const std::string& line) {
  for (std::size_t i = 0; i < line.size(); ++i) {
    if ((line[i] == '#' || line[i] == ';') && (i == 0 || std::isspace(static_cast<unsigned char>(line[i - 1])))) {
      return line.substr(0, i);
    }
  }
  return line;
}

class Reader {
 public:
  explicit Reader(const IniDocument& doc) : doc_(doc) {}

  const Entry& required(const std::string& section, const std::string& key) const {
    const Entry* e = doc_.find(section, key);
    if (!e) throw ConfigError("missing required key '" + key + "' in [" + section + "]");
    return *e;
  }

  double real(const std::string& section, const std::string& key) const {
    const Entry& e = required(section, key);
    return parse_real(e.value, e.origin + ": " + key);
  }

  double real_or(const std::string& section, const std::string& key, double fallback) const {
    return doc_.has(section, key) ? real(section, key) : fallback;
  }

  template <typename Int>
  Int integer(const std::string& section, const std::string& key) const {
    const Entry& e = required(section, key);
    Int v{};
    const auto* first = e.value.data();
    const auto* last = first + e.value.size();
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last) {
      throw ConfigError(e.origin + ": " + key + " must be a non-negative integer, got '" + e.value + "'");
    }
    return v;
  }

  std::string text_or(const std::string& section, const std::string& key, std::string fallback = {}) const {
    const Entry* e = doc_.find(section, key);
    return e ? e->value : fallback;
  }

 private:
  const IniDocument& doc_;
};

SystemParams read_system(const Reader& r, const IniDocument& doc) {
  RawParams raw;
  const bool has_eta = doc.has("system", "eta");
  const bool has_raw = doc.has("system", "G") || doc.has("system", "v_g");
  if (has_eta && has_raw) throw ConfigError("give either eta or (G, v_g) in [system], not both");
  raw.g = r.real("system", "g");
  raw.h = r.real("system", "h");
  raw.omega1 = r.real("system", "omega1");
  raw.omega2 = r.real("system", "omega2");
  raw.gamma = r.real("system", "gamma");
  raw.theta = r.real("system", "theta");
  try {
    if (has_raw) return SystemParams::from_coupling(r.real("system", "G"), r.real("system", "v_g"), raw);
    raw.eta = r.real("system", "eta");
    return SystemParams(raw);
  } catch (const InvalidParams& e) {
    throw ConfigError(std::string("[system]: ") + e.what());
  }
}

AxisSpec read_axis(const Reader& r, const std::string& suffix, int default_count) {
  const std::string name_key = suffix.empty() ? "axis" : "axis" + suffix;
  const std::string name = r.text_or("sweep", name_key, suffix.empty() ? "delta" : "");
  const auto param = parse_parameter(name);
  if (!param) throw ConfigError("[sweep] " + name_key + ": unknown parameter '" + name + "'");
  AxisSpec a;
  a.param = *param;
  a.start = r.real("sweep", "start" + suffix);
  a.stop = r.real("sweep", "stop" + suffix);
  a.count = default_count;
  if (r.text_or("sweep", "count" + suffix).size() > 0) a.count = r.integer<int>("sweep", "count" + suffix);
  try {
    a.validate();
  } catch (const InvalidParams& e) {
    throw ConfigError(std::string("[sweep]: ") + e.what());
  }
  return a;
}

bool parse_bool(const std::string& text, const std::string& what) {
  if (text == "true" || text == "yes" || text == "1") return true;
  if (text == "false" || text == "no" || text == "0") return false;
  throw ConfigError(what + ": expected true/false, got '" + text + "'");
}

}  // namespace

const Entry* IniDocument::find(const std::string& section, const std::string& key) const {
  const auto s = sections.find(section);
  if (s == sections.end()) return nullptr;
  const auto k = s->second.find(key);
  return k == s->second.end() ? nullptr : &k->second;
}

IniDocument parse_ini(std::istream& is, const std::string& source) {
  IniDocument doc;
  std::string line;
  std::string section;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    const std::string origin = source + ":" + std::to_string(lineno);
    const std::string body = trim(strip_comment(line));
    if (body.empty()) continue;
    if (body.front() == '[') {
      if (body.back() != ']') throw ConfigError(origin + ": malformed section header");
      section = trim(std::string_view(body).substr(1, body.size() - 2));
      if (!schema().contains(section)) throw ConfigError(origin + ": unknown section [" + section + "]");
      doc.sections[section];
      continue;
    }
    const auto eq = body.find('=');
    if (eq == std::string::npos) throw ConfigError(origin + ": expected 'key = value'");
    if (section.empty()) throw ConfigError(origin + ": key outside of any section");
    const std::string key = trim(std::string_view(body).substr(0, eq));
    const std::string value = trim(std::string_view(body).substr(eq + 1));
    check_known(section, key, origin);
    auto [it, inserted] = doc.sections[section].emplace(key, Entry{value, origin});
    if (!inserted) throw ConfigError(origin + ": duplicate key '" + key + "' (first at " + it->second.origin + ")");
  }
  return doc;
}

IniDocument load_ini(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  return parse_ini(in, path);
}

void apply_override(IniDocument& doc, const std::string& assignment) {
  const auto eq = assignment.find('=');
  const auto dot = assignment.find('.');
  if (eq == std::string::npos || dot == std::string::npos || dot > eq) {
    throw ConfigError("--set expects section.key=value, got '" + assignment + "'");
  }
  const std::string section = trim(std::string_view(assignment).substr(0, dot));
  const std::string key = trim(std::string_view(assignment).substr(dot + 1, eq - dot - 1));
  const std::string value = trim(std::string_view(assignment).substr(eq + 1));
  check_known(section, key, "--set");
  doc.sections[section][key] = Entry{value, "--set"};
}

double parse_real(const std::string& text, const std::string& what) {
  std::string s = trim(text);
  double factor = 1.0;
  if (s.size() >= 2 && s.compare(s.size() - 2, 2, "pi") == 0) {
    factor = std::numbers::pi;
    s.resize(s.size() - 2);
    if (!s.empty() && s.back() == '*') s.pop_back();
    s = trim(s);
    if (s.empty() || s == "+") s = "1";
    if (s == "-") s = "-1";
  }
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  double v = 0.0;
  const auto* first = s.data();
  const auto* last = first + s.size();
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (s.empty() || ec != std::errc{} || ptr != last) {
    throw ConfigError(what + ": cannot parse number '" + text + "'");
  }
  return v * factor;
}

RunConfig build_run_config(const IniDocument& doc, Command command) {
  const Reader r(doc);
  RunConfig cfg;

  cfg.csv_path = r.text_or("output", "csv");
  cfg.svg_path = r.text_or("output", "svg");
  cfg.json_path = r.text_or("output", "json");
  if (doc.has("output", "timestamp")) cfg.timestamp = parse_bool(r.text_or("output", "timestamp"), "timestamp");

  cfg.min_prominence = r.real_or("analysis", "min_prominence", cfg.min_prominence);
  cfg.tolerance = r.real_or("analysis", "tolerance", cfg.tolerance);
  cfg.thresholds.tau_R = r.real_or("analysis", "tau_R", cfg.thresholds.tau_R);
  cfg.thresholds.tau_T = r.real_or("analysis", "tau_T", cfg.thresholds.tau_T);
  if (!(cfg.min_prominence > 0.0)) throw ConfigError("[analysis] min_prominence must be positive");
  if (!(cfg.tolerance > 0.0)) throw ConfigError("[analysis] tolerance must be positive");
  if (doc.has("analysis", "band_min") || doc.has("analysis", "band_max")) {
    const double lo = r.real("analysis", "band_min");
    const double hi = r.real("analysis", "band_max");
    if (!(hi > lo)) throw ConfigError("[analysis] band_max must exceed band_min");
    cfg.band = std::make_pair(lo, hi);
  }

  switch (command) {
    case Command::spectrum:
      cfg.system = read_system(r, doc);
      cfg.axis = read_axis(r, "", kDefaultResolution);
      cfg.fixed_delta = r.real_or("sweep", "fixed_delta", 0.0);
      break;
    case Command::map: {
      cfg.system = read_system(r, doc);
      cfg.axis = read_axis(r, "", kDefaultResolution);
      if (!doc.has("sweep", "axis2")) throw ConfigError("missing required key 'axis2' in [sweep]");
      cfg.axis2 = read_axis(r, "2", kDefaultResolution);
      if (cfg.axis2->param == cfg.axis.param) {
        throw ConfigError("[sweep] axis and axis2 must differ, both are '" + std::string(to_string(cfg.axis.param)) +
                          "'");
      }
      const std::string q = r.text_or("sweep", "quantity", "R_f");
      const auto quantity = parse_quantity(q);
      if (!quantity) throw ConfigError("[sweep] quantity: unknown quantity '" + q + "'");
      cfg.quantity = *quantity;
      cfg.fixed_delta = r.real_or("sweep", "fixed_delta", 0.0);
      break;
    }
    case Command::verify: {
      const auto draws = r.integer<long long>("verify", "draws");
      if (draws < 1) throw ConfigError("[verify] draws must be at least 1");
      cfg.draws = static_cast<std::size_t>(draws);
      cfg.seed = r.integer<std::uint64_t>("verify", "seed");
      break;
    }
    case Command::analyze:
      cfg.input = r.required("analysis", "input").value;
      break;
  }
  return cfg;
}

}  // namespace wgm::config
