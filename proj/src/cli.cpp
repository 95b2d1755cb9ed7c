#include "wgm/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>

#include "wgm/analysis.hpp"
#include "wgm/config.hpp"
#include "wgm/csv.hpp"
#include "wgm/report.hpp"
#include "wgm/svg.hpp"
#include "wgm/sweep.hpp"
#include "wgm/verify.hpp"
#include "wgm/version.hpp"

namespace wgm::cli {

namespace {

using config::Command;
using config::ConfigError;

struct Options {
  std::string config_path;
  std::string svg_path;
  int threads = 0;
  std::vector<std::string> overrides;
};

int threads_from_env() {
  const char* env = std::getenv(kThreadsEnv);
  if (!env || !*env) return 0;
  const std::string text(env);
  std::size_t used = 0;
  int n = 0;
  try {
    n = std::stoi(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || n < 1) {
    throw ConfigError(std::string(kThreadsEnv) + " must be a positive integer, got '" + text + "'");
  }
  return n;
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

// Writes to `path`, or to `fallback` when the path is empty.
template <typename Writer>
void emit(const std::string& path, std::ostream& fallback, Writer&& write) {
  if (path.empty()) {
    write(fallback);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::ios_base::failure("cannot open '" + path + "' for writing");
  write(file);
  file.close();
  if (!file) throw std::ios_base::failure("failed writing '" + path + "'");
}

void write_text(const std::string& path, std::ostream& fallback, const std::string& text) {
  emit(path, fallback, [&](std::ostream& os) { os << text; });
}

void write_json(const std::string& path, std::ostream& fallback, const nlohmann::ordered_json& doc) {
  write_text(path, fallback, doc.dump(2) + "\n");
}

config::RunConfig load(const Options& opt, Command command) {
  config::IniDocument doc = config::load_ini(opt.config_path);
  for (const auto& o : opt.overrides) config::apply_override(doc, o);
  return config::build_run_config(doc, command);
}

int cmd_spectrum(const Options& opt, std::ostream& out) {
  const auto cfg = load(opt, Command::spectrum);
  SpectrumTable table = sweep1d(*cfg.system, cfg.axis, cfg.fixed_delta, opt.threads);
  if (cfg.timestamp) table.provenance.timestamp = utc_timestamp();
  emit(cfg.csv_path, out, [&](std::ostream& os) { write_csv(os, table); });
  const std::string svg_path = opt.svg_path.empty() ? cfg.svg_path : opt.svg_path;
  if (!svg_path.empty()) write_text(svg_path, out, svg::line_plot(table));
  return kExitOk;
}

int cmd_map(const Options& opt, std::ostream& out) {
  const auto cfg = load(opt, Command::map);
  GridTable table = sweep2d(*cfg.system, cfg.axis, *cfg.axis2, cfg.quantity, cfg.fixed_delta, opt.threads);
  if (cfg.timestamp) table.provenance.timestamp = utc_timestamp();
  emit(cfg.csv_path, out, [&](std::ostream& os) { write_csv(os, table); });
  const std::string svg_path = opt.svg_path.empty() ? cfg.svg_path : opt.svg_path;
  if (!svg_path.empty()) write_text(svg_path, out, svg::heatmap(table));
  return kExitOk;
}

int cmd_verify(const Options& opt, std::ostream& out, std::ostream& err) {
  const auto cfg = load(opt, Command::verify);
  const VerifyResult res = run_verification(cfg.draws, cfg.seed);
  write_json(cfg.json_path, out, report::to_json(res));
  if (!res.passed()) {
    err << "verify: max relative error " << res.max_rel_err << " exceeds " << res.tolerance << '\n';
    return kExitNumerical;
  }
  return kExitOk;
}

int cmd_analyze(const Options& opt, std::ostream& out) {
  const auto cfg = load(opt, Command::analyze);
  std::ifstream in(cfg.input, std::ios::binary);
  if (!in) throw ConfigError("cannot open analysis input '" + cfg.input + "'");
  const SpectrumTable table = read_spectrum_csv(in);
  if (table.axis.param != Parameter::delta) {
    throw ConfigError("analyze needs a spectrum over delta, input scans '" +
                      std::string(to_string(table.axis.param)) + "'");
  }

  const auto band = cfg.band.value_or(std::make_pair(table.axis.start, table.axis.stop));
  const RegimeLabel regime = classify_regime(table.base, band, cfg.thresholds, kDefaultResolution, opt.threads);

  nlohmann::ordered_json dips = nlohmann::ordered_json::object();
  nlohmann::ordered_json correspondence = nlohmann::ordered_json::object();
  for (Quantity q : {Quantity::R_f, Quantity::R_b, Quantity::T_f, Quantity::T_b}) {
    const auto found = find_dips(table, q, cfg.min_prominence);
    auto list = nlohmann::ordered_json::array();
    for (const auto& d : found) list.push_back(report::to_json(d));
    dips[std::string(to_string(q))] = list;
    correspondence[std::string(to_string(q))] =
        report::to_json(dip_correspondence(found, q, table.base.omega1(), table.base.omega2(), cfg.tolerance));
  }

  nlohmann::ordered_json doc;
  doc["input"] = cfg.input;
  doc["params"] = report::to_json(table.base);
  doc["min_prominence"] = cfg.min_prominence;
  doc["tolerance"] = cfg.tolerance;
  doc["band"] = {band.first, band.second};
  doc["contrast"] = report::to_json(contrast_metrics(table));
  doc["regime"] = report::to_json(regime);
  doc["dips"] = dips;
  doc["correspondence"] = correspondence;
  write_json(cfg.json_path, out, doc);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Single-photon scattering spectra of two Zeeman-QD whispering-gallery resonators",
               std::string(kToolName)};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  Options opt;
  const auto add_common = [&opt](CLI::App* sub) {
    sub->add_option("--config", opt.config_path, "INI configuration file")->required();
    sub->add_option("--threads", opt.threads, "worker threads (default: $WGM_SCATTER_THREADS or all cores)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--set", opt.overrides, "override a config entry, e.g. --set system.eta=6");
  };
  CLI::App* spectrum = app.add_subcommand("spectrum", "1D sweep to CSV (optionally SVG line plot)");
  CLI::App* map = app.add_subcommand("map", "2D sweep to CSV (optionally SVG heatmap)");
  CLI::App* verify = app.add_subcommand("verify", "closed form vs. linear-system oracle on random draws");
  CLI::App* analyze = app.add_subcommand("analyze", "dips, contrasts, regime and correspondence of a spectrum CSV");
  for (CLI::App* sub : {spectrum, map, verify, analyze}) add_common(sub);
  spectrum->add_option("--svg", opt.svg_path, "also write an SVG line plot");
  map->add_option("--svg", opt.svg_path, "also write an SVG heatmap");

  std::vector<std::string> storage;
  storage.reserve(args.size() + 1);
  storage.push_back(std::string(kToolName));
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (opt.threads == 0) opt.threads = threads_from_env();
    if (spectrum->parsed()) return cmd_spectrum(opt, out);
    if (map->parsed()) return cmd_map(opt, out);
    if (verify->parsed()) return cmd_verify(opt, out, err);
    return cmd_analyze(opt, out);
  } catch (const NumericalError& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::ios_base::failure& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace wgm::cli
