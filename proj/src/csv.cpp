#include "wgm/csv.hpp"

#include <array>
#include <charconv>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string_view>
#include <vector>

#include "wgm/version.hpp"

namespace wgm {

namespace {

using Metadata = std::map<std::string, std::string, std::less<>>;

constexpr std::array<Parameter, 7> kSystemFields{Parameter::eta,    Parameter::g,      Parameter::h,
                                                 Parameter::omega1, Parameter::omega2, Parameter::gamma,
                                                 Parameter::theta};

std::string field_key(Parameter p) { return std::string(to_string(p)) + "_" + std::string(unit_of(p)); }

void write_meta(std::ostream& os, std::string_view key, std::string_view value) {
  os << "# " << key << " = " << value << '\n';
}

void write_common(std::ostream& os, const SystemParams& base, const Provenance& prov, double fixed_delta) {
  write_meta(os, "tool", std::string(kToolName) + " " + prov.tool_version);
  if (!prov.timestamp.empty()) write_meta(os, "timestamp", prov.timestamp);
  for (Parameter p : kSystemFields) write_meta(os, field_key(p), format_double(base.get(p)));
  write_meta(os, "fixed_delta_GHz", format_double(fixed_delta));
}

void write_axis(std::ostream& os, std::string_view prefix, const AxisSpec& axis) {
  const std::string pre(prefix);
  write_meta(os, pre, to_string(axis.param));
  write_meta(os, pre + "_start", format_double(axis.start));
  write_meta(os, pre + "_stop", format_double(axis.stop));
  write_meta(os, pre + "_count", std::to_string(axis.count));
}

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_double(std::string_view s, std::string_view what) {
  s = trim(s);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw CsvError("cannot parse " + std::string(what) + " value '" + std::string(s) + "'");
  }
  return v;
}

int parse_int(std::string_view s, std::string_view what) {
  s = trim(s);
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw CsvError("cannot parse " + std::string(what) + " value '" + std::string(s) + "'");
  }
  return v;
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    const auto comma = line.find(',', pos);
    out.push_back(line.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

struct Parsed {
  Metadata meta;
  std::string header;
  std::vector<std::string> rows;
};

Parsed parse_document(std::istream& is) {
  Parsed doc;
  std::string line;
  bool have_header = false;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!have_header && !line.empty() && line.front() == '#') {
      const std::string_view body = std::string_view(line).substr(1);
      const auto eq = body.find('=');
      if (eq == std::string_view::npos) continue;
      doc.meta.emplace(std::string(trim(body.substr(0, eq))), std::string(trim(body.substr(eq + 1))));
      continue;
    }
    if (line.empty()) continue;
    if (!have_header) {
      doc.header = line;
      have_header = true;
    } else {
      doc.rows.push_back(line);
    }
  }
  if (!have_header) throw CsvError("missing header row");
  return doc;
}

const std::string& require(const Metadata& meta, std::string_view key) {
  const auto it = meta.find(key);
  if (it == meta.end()) throw CsvError("missing metadata key '" + std::string(key) + "'");
  return it->second;
}

SystemParams read_params(const Metadata& meta) {
  RawParams raw;
  raw.eta = parse_double(require(meta, "eta_GHz"), "eta_GHz");
  raw.g = parse_double(require(meta, "g_GHz"), "g_GHz");
  raw.h = parse_double(require(meta, "h_GHz"), "h_GHz");
  raw.omega1 = parse_double(require(meta, "omega1_GHz"), "omega1_GHz");
  raw.omega2 = parse_double(require(meta, "omega2_GHz"), "omega2_GHz");
  raw.gamma = parse_double(require(meta, "gamma_GHz"), "gamma_GHz");
  raw.theta = parse_double(require(meta, "theta_rad"), "theta_rad");
  try {
    return SystemParams(raw);
  } catch (const InvalidParams& e) {
    throw CsvError(std::string("invalid parameters in metadata: ") + e.what());
  }
}

AxisSpec read_axis(const Metadata& meta, const std::string& prefix) {
  const auto param = parse_parameter(require(meta, prefix));
  if (!param) throw CsvError("unknown axis parameter '" + require(meta, prefix) + "'");
  AxisSpec a{*param, parse_double(require(meta, prefix + "_start"), prefix + "_start"),
             parse_double(require(meta, prefix + "_stop"), prefix + "_stop"),
             parse_int(require(meta, prefix + "_count"), prefix + "_count")};
  try {
    a.validate();
  } catch (const InvalidParams& e) {
    throw CsvError(e.what());
  }
  return a;
}

Provenance read_provenance(const Metadata& meta) {
  Provenance p;
  const auto& tool = require(meta, "tool");
  const auto space = tool.rfind(' ');
  p.tool_version = space == std::string::npos ? tool : tool.substr(space + 1);
  if (const auto it = meta.find("timestamp"); it != meta.end()) p.timestamp = it->second;
  return p;
}

}  // namespace

std::string format_double(double v) {
  std::array<char, 32> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ptr);
}

std::string spectrum_header(Parameter axis) {
  return field_key(axis) + ",R_f,R_b,T_f,T_b,contrast_R,contrast_T";
}

void write_csv(std::ostream& os, const SpectrumTable& table) {
  const auto old = os.exceptions();
  os.exceptions(std::ios_base::failbit | std::ios_base::badbit);
  write_common(os, table.base, table.provenance, table.fixed_delta);
  write_axis(os, "axis", table.axis);
  os << spectrum_header(table.axis.param) << '\n';
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const auto& r = table.rows[i];
    os << format_double(table.x[i]) << ',' << format_double(r.R_f) << ',' << format_double(r.R_b) << ','
       << format_double(r.T_f) << ',' << format_double(r.T_b) << ',' << format_double(r.contrast_R) << ','
       << format_double(r.contrast_T) << '\n';
  }
  os.flush();
  os.exceptions(old);
}

void write_csv(std::ostream& os, const GridTable& table) {
  const auto old = os.exceptions();
  os.exceptions(std::ios_base::failbit | std::ios_base::badbit);
  write_common(os, table.base, table.provenance, table.fixed_delta);
  write_axis(os, "axis1", table.axis1);
  write_axis(os, "axis2", table.axis2);
  write_meta(os, "quantity", to_string(table.quantity));
  os << "axis1,axis2,value\n";
  const auto v1 = table.axis1.values();
  const auto v2 = table.axis2.values();
  for (std::size_t i = 0; i < v1.size(); ++i) {
    for (std::size_t j = 0; j < v2.size(); ++j) {
      os << format_double(v1[i]) << ',' << format_double(v2[j]) << ','
         << format_double(table.values[i * v2.size() + j]) << '\n';
    }
  }
  os.flush();
  os.exceptions(old);
}

SpectrumTable read_spectrum_csv(std::istream& is) {
  Parsed doc = parse_document(is);
  const AxisSpec axis = read_axis(doc.meta, "axis");
  if (doc.header != spectrum_header(axis.param)) {
    throw CsvError("unexpected header '" + doc.header + "', expected '" + spectrum_header(axis.param) + "'");
  }
  SpectrumTable t{axis, parse_double(require(doc.meta, "fixed_delta_GHz"), "fixed_delta_GHz"),
                  read_params(doc.meta), {}, {}, read_provenance(doc.meta)};
  if (doc.rows.size() != static_cast<std::size_t>(axis.count)) {
    throw CsvError("expected " + std::to_string(axis.count) + " data rows, found " +
                   std::to_string(doc.rows.size()));
  }
  t.x.reserve(doc.rows.size());
  t.rows.reserve(doc.rows.size());
  for (std::size_t i = 0; i < doc.rows.size(); ++i) {
    const auto cells = split(doc.rows[i]);
    if (cells.size() != 7) throw CsvError("row " + std::to_string(i) + " has " + std::to_string(cells.size()) + " columns");
    t.x.push_back(parse_double(cells[0], "axis"));
    ScatteringPowers p;
    p.R_f = parse_double(cells[1], "R_f");
    p.R_b = parse_double(cells[2], "R_b");
    p.T_f = parse_double(cells[3], "T_f");
    p.T_b = parse_double(cells[4], "T_b");
    p.contrast_R = parse_double(cells[5], "contrast_R");
    p.contrast_T = parse_double(cells[6], "contrast_T");
    t.rows.push_back(p);
  }
  return t;
}

GridTable read_grid_csv(std::istream& is) {
  Parsed doc = parse_document(is);
  if (doc.header != "axis1,axis2,value") {
    throw CsvError("unexpected header '" + doc.header + "', expected 'axis1,axis2,value'");
  }
  const auto quantity = parse_quantity(require(doc.meta, "quantity"));
  if (!quantity) throw CsvError("unknown quantity '" + require(doc.meta, "quantity") + "'");
  GridTable t{read_axis(doc.meta, "axis1"),
              read_axis(doc.meta, "axis2"),
              *quantity,
              parse_double(require(doc.meta, "fixed_delta_GHz"), "fixed_delta_GHz"),
              read_params(doc.meta),
              {},
              read_provenance(doc.meta)};
  const auto expected = static_cast<std::size_t>(t.axis1.count) * t.axis2.count;
  if (doc.rows.size() != expected) {
    throw CsvError("expected " + std::to_string(expected) + " data rows, found " + std::to_string(doc.rows.size()));
  }
  t.values.reserve(expected);
  for (std::size_t k = 0; k < doc.rows.size(); ++k) {
    const auto cells = split(doc.rows[k]);
    if (cells.size() != 3) throw CsvError("row " + std::to_string(k) + " has " + std::to_string(cells.size()) + " columns");
    t.values.push_back(parse_double(cells[2], "value"));
  }
  return t;
}

}  // namespace wgm
