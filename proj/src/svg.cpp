#include "wgm/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

#include "wgm/csv.hpp"

namespace wgm::svg {

namespace {

constexpr std::array<Rgb, 256> kViridis{{
#include "colormap_table.inc"
}};

constexpr double kWidth = 820.0;
constexpr double kHeight = 520.0;
constexpr double kLeft = 80.0;
constexpr double kRight = 150.0;
constexpr double kTop = 50.0;
constexpr double kBottom = 60.0;

struct Frame {
  double x0, x1, y0, y1;  // data range
  double left = kLeft, top = kTop;
  double width = kWidth - kLeft - kRight;
  double height = kHeight - kTop - kBottom;

  double px(double x) const { return left + (x - x0) / (x1 - x0) * width; }
  double py(double y) const { return top + height - (y - y0) / (y1 - y0) * height; }
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", std::abs(v) < 1e-12 ? 0.0 : v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::vector<double> nice_ticks(double lo, double hi, int target = 6) {
  const double raw = (hi - lo) / target;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  double step = mag;
  for (double m : {1.0, 2.0, 2.5, 5.0, 10.0}) {
    step = m * mag;
    if (step >= raw) break;
  }
  std::vector<double> ticks;
  for (double t = std::ceil(lo / step) * step; t <= hi + 1e-9 * step; t += step) ticks.push_back(t);
  return ticks;
}

std::string axis_title(Parameter p) {
  switch (p) {
    case Parameter::delta: return "detuning delta/2pi (GHz)";
    case Parameter::theta: return "phase shift theta (rad)";
    case Parameter::eta: return "eta/2pi (GHz)";
    case Parameter::g: return "g/2pi (GHz)";
    case Parameter::h: return "h/2pi (GHz)";
    case Parameter::omega1: return "omega1/2pi (GHz)";
    case Parameter::omega2: return "omega2/2pi (GHz)";
    case Parameter::gamma: return "gamma/2pi (GHz)";
  }
  return {};
}

void open_document(std::ostringstream& os, const std::string& title) {
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
     << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  if (!title.empty()) {
    os << "<text x=\"" << fmt(kWidth / 2) << "\" y=\"28\" text-anchor=\"middle\" font-size=\"15\">" << escape(title)
       << "</text>\n";
  }
}

void draw_axes(std::ostringstream& os, const Frame& f, const std::string& xtitle, const std::string& ytitle) {
  os << "<rect x=\"" << fmt(f.left) << "\" y=\"" << fmt(f.top) << "\" width=\"" << fmt(f.width) << "\" height=\""
     << fmt(f.height) << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (double t : nice_ticks(f.x0, f.x1)) {
    const double x = f.px(t);
    const double yb = f.top + f.height;
    os << "<line x1=\"" << fmt(x) << "\" y1=\"" << fmt(yb) << "\" x2=\"" << fmt(x) << "\" y2=\"" << fmt(yb + 5)
       << "\" stroke=\"black\"/>\n";
    os << "<text x=\"" << fmt(x) << "\" y=\"" << fmt(yb + 18) << "\" text-anchor=\"middle\">" << label(t)
       << "</text>\n";
  }
  for (double t : nice_ticks(f.y0, f.y1)) {
    const double y = f.py(t);
    os << "<line x1=\"" << fmt(f.left - 5) << "\" y1=\"" << fmt(y) << "\" x2=\"" << fmt(f.left) << "\" y2=\""
       << fmt(y) << "\" stroke=\"black\"/>\n";
    os << "<text x=\"" << fmt(f.left - 8) << "\" y=\"" << fmt(y + 4) << "\" text-anchor=\"end\">" << label(t)
       << "</text>\n";
  }
  os << "<text x=\"" << fmt(f.left + f.width / 2) << "\" y=\"" << fmt(kHeight - 15)
     << "\" text-anchor=\"middle\">" << escape(xtitle) << "</text>\n";
  const double yc = f.top + f.height / 2;
  os << "<text x=\"20\" y=\"" << fmt(yc) << "\" text-anchor=\"middle\" transform=\"rotate(-90 20 " << fmt(yc)
     << ")\">" << escape(ytitle) << "</text>\n";
}

}  // namespace

const std::array<Rgb, 256>& colormap() { return kViridis; }

Rgb color_at(double t) {
  if (!(t > 0.0)) return kViridis.front();
  if (t >= 1.0) return kViridis.back();
  return kViridis[static_cast<std::size_t>(t * 255.0 + 0.5)];
}

std::string line_plot(const SpectrumTable& table, const std::string& title) {
  double ymax = 1.0;
  for (const auto& r : table.rows) ymax = std::max({ymax, r.R_f, r.R_b, r.T_f, r.T_b});
  const Frame f{table.x.front(), table.x.back(), 0.0, ymax};

  std::ostringstream os;
  open_document(os, title);
  draw_axes(os, f, axis_title(table.axis.param), "reflection / transmission");

  struct Series {
    Quantity q;
    const char* colour;
    const char* dash;
  };
  const Series series[] = {{Quantity::R_f, "#d62728", ""},
                           {Quantity::R_b, "#d62728", "8 3 2 3"},
                           {Quantity::T_f, "#000000", ""},
                           {Quantity::T_b, "#000000", "8 3 2 3"}};
  for (const auto& s : series) {
    os << "<polyline fill=\"none\" stroke=\"" << s.colour << "\" stroke-width=\"1.5\"";
    if (*s.dash) os << " stroke-dasharray=\"" << s.dash << '"';
    os << " points=\"";
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
      if (i) os << ' ';
      os << fmt(f.px(table.x[i])) << ',' << fmt(f.py(select(table.rows[i], s.q)));
    }
    os << "\"/>\n";
  }

  double ly = f.top + 10;
  const double lx = f.left + f.width + 20;
  for (const auto& s : series) {
    os << "<line x1=\"" << fmt(lx) << "\" y1=\"" << fmt(ly) << "\" x2=\"" << fmt(lx + 30) << "\" y2=\"" << fmt(ly)
       << "\" stroke=\"" << s.colour << "\" stroke-width=\"1.5\"";
    if (*s.dash) os << " stroke-dasharray=\"" << s.dash << '"';
    os << "/>\n";
    os << "<text x=\"" << fmt(lx + 38) << "\" y=\"" << fmt(ly + 4) << "\">" << to_string(s.q) << "</text>\n";
    ly += 20;
  }
  os << "</svg>\n";
  return os.str();
}

std::string heatmap(const GridTable& table, const std::string& title) {
  const auto [lo_it, hi_it] = std::minmax_element(table.values.begin(), table.values.end());
  const double lo = *lo_it;
  const double hi = *hi_it > lo ? *hi_it : lo + 1.0;

  // Cells are centred on grid points; the frame extends half a cell beyond.
  const double dx = (table.axis1.stop - table.axis1.start) / (table.axis1.count - 1);
  const double dy = (table.axis2.stop - table.axis2.start) / (table.axis2.count - 1);
  const Frame f{table.axis1.start - dx / 2, table.axis1.stop + dx / 2, table.axis2.start - dy / 2,
                table.axis2.stop + dy / 2};
  const double cw = f.width / table.axis1.count;
  const double ch = f.height / table.axis2.count;

  std::ostringstream os;
  open_document(os, title);
  os << "<g shape-rendering=\"crispEdges\">\n";
  for (int i = 0; i < table.axis1.count; ++i) {
    for (int j = 0; j < table.axis2.count; ++j) {
      const Rgb c = color_at((table.at(i, j) - lo) / (hi - lo));
      char colour[8];
      std::snprintf(colour, sizeof colour, "#%02x%02x%02x", c[0], c[1], c[2]);
      // Slight overlap hides anti-aliasing seams between neighbouring cells.
      os << "<rect x=\"" << fmt(f.left + i * cw) << "\" y=\"" << fmt(f.top + f.height - (j + 1) * ch)
         << "\" width=\"" << fmt(cw + 0.3) << "\" height=\"" << fmt(ch + 0.3) << "\" fill=\"" << colour << "\"/>\n";
    }
  }
  os << "</g>\n";
  draw_axes(os, f, axis_title(table.axis1.param), axis_title(table.axis2.param));

  const double bx = f.left + f.width + 30;
  const double bw = 20;
  const int steps = 64;
  for (int k = 0; k < steps; ++k) {
    const Rgb c = color_at((k + 0.5) / steps);
    char colour[8];
    std::snprintf(colour, sizeof colour, "#%02x%02x%02x", c[0], c[1], c[2]);
    const double y = f.top + f.height * (1.0 - static_cast<double>(k + 1) / steps);
    os << "<rect x=\"" << fmt(bx) << "\" y=\"" << fmt(y) << "\" width=\"" << fmt(bw) << "\" height=\""
       << fmt(f.height / steps + 0.3) << "\" fill=\"" << colour << "\"/>\n";
  }
  os << "<rect x=\"" << fmt(bx) << "\" y=\"" << fmt(f.top) << "\" width=\"" << fmt(bw) << "\" height=\""
     << fmt(f.height) << "\" fill=\"none\" stroke=\"black\"/>\n";
  const Frame bar{0, 1, lo, hi};
  for (double t : nice_ticks(lo, hi, 5)) {
    const double y = bar.py(t);
    os << "<text x=\"" << fmt(bx + bw + 6) << "\" y=\"" << fmt(y + 4) << "\">" << label(t) << "</text>\n";
  }
  os << "<text x=\"" << fmt(bx) << "\" y=\"" << fmt(f.top - 10) << "\">" << to_string(table.quantity)
     << "</text>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace wgm::svg
