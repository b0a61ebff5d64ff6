#include "ergo/svg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "ergo/csv.hpp"

namespace ergo::svg {

namespace {

constexpr double kPanelW = 420.0;
constexpr double kPanelH = 300.0;
constexpr double kMarginL = 62.0;
constexpr double kMarginR = 14.0;
constexpr double kMarginT = 34.0;
constexpr double kMarginB = 46.0;

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();

  void add(double v) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  bool valid() const { return lo <= hi; }
};

double transform(double v, bool log_scale) {
  return log_scale ? std::log10(v) : v;
}

bool usable(double v, bool log_scale) {
  return std::isfinite(v) && (!log_scale || v > 0.0);
}

std::string fmt(double v) {
  std::ostringstream out;
  if (v != 0.0 && (std::abs(v) >= 1e4 || std::abs(v) < 1e-3))
    out.precision(1), out << std::scientific << v;
  else
    out.precision(4), out << v;
  return out.str();
}

std::vector<double> linear_ticks(double lo, double hi) {
  const double span = hi - lo;
  if (!(span > 0)) return {lo};
  const double raw = span / 4.0;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  double step = mag;
  for (double m : {1.0, 2.0, 5.0, 10.0})
    if (raw <= m * mag) {
      step = m * mag;
      break;
    }
  std::vector<double> ticks;
  for (double t = std::ceil(lo / step) * step; t <= hi + step * 1e-9; t += step)
    ticks.push_back(t);
  return ticks;
}

std::vector<double> log_ticks(double lo, double hi) {
  std::vector<double> ticks;
  for (int e = static_cast<int>(std::floor(lo)); e <= std::ceil(hi); ++e)
    if (e >= lo - 1e-9 && e <= hi + 1e-9)
      ticks.push_back(static_cast<double>(e));
  if (ticks.size() < 2) return {lo, hi};
  return ticks;
}

void render_panel(std::ostringstream& out, const Panel& panel, double x0,
                  double y0) {
  const double plot_x = x0 + kMarginL;
  const double plot_y = y0 + kMarginT;
  const double plot_w = kPanelW - kMarginL - kMarginR;
  const double plot_h = kPanelH - kMarginT - kMarginB;

  Range rx, ry;
  for (const auto& curve : panel.curves)
    for (std::size_t i = 0; i < curve.x.size(); ++i)
      if (usable(curve.x[i], panel.log_x) && usable(curve.y[i], panel.log_y)) {
        rx.add(transform(curve.x[i], panel.log_x));
        ry.add(transform(curve.y[i], panel.log_y));
      }
  if (!rx.valid()) rx = {0.0, 1.0};
  if (!ry.valid()) ry = {0.0, 1.0};
  if (rx.hi == rx.lo) rx.hi = rx.lo + 1.0;
  if (ry.hi == ry.lo) {
    ry.lo -= 0.5;
    ry.hi += 0.5;
  }
  // A little headroom.
  const double pad = (ry.hi - ry.lo) * 0.05;
  ry.lo -= pad;
  ry.hi += pad;

  auto map_x = [&](double v) {
    return plot_x + (transform(v, panel.log_x) - rx.lo) / (rx.hi - rx.lo) * plot_w;
  };
  auto map_y = [&](double v) {
    return plot_y + plot_h -
           (transform(v, panel.log_y) - ry.lo) / (ry.hi - ry.lo) * plot_h;
  };

  out << "<rect x='" << plot_x << "' y='" << plot_y << "' width='" << plot_w
      << "' height='" << plot_h
      << "' fill='white' stroke='#444' stroke-width='1'/>\n";
  out << "<text x='" << x0 + kPanelW / 2 << "' y='" << y0 + 20
      << "' text-anchor='middle' font-size='13' font-weight='bold'>"
      << panel.title << "</text>\n";

  const auto xticks = panel.log_x ? log_ticks(rx.lo, rx.hi)
                                  : linear_ticks(rx.lo, rx.hi);
  for (double t : xticks) {
    const double px = plot_x + (t - rx.lo) / (rx.hi - rx.lo) * plot_w;
    out << "<line x1='" << px << "' y1='" << plot_y + plot_h << "' x2='" << px
        << "' y2='" << plot_y + plot_h + 4 << "' stroke='#444'/>\n";
    const double label = panel.log_x ? std::pow(10.0, t) : t;
    out << "<text x='" << px << "' y='" << plot_y + plot_h + 16
        << "' text-anchor='middle' font-size='10'>" << fmt(label)
        << "</text>\n";
  }
  const auto yticks = panel.log_y ? log_ticks(ry.lo, ry.hi)
                                  : linear_ticks(ry.lo, ry.hi);
  for (double t : yticks) {
    const double py = plot_y + plot_h - (t - ry.lo) / (ry.hi - ry.lo) * plot_h;
    out << "<line x1='" << plot_x - 4 << "' y1='" << py << "' x2='" << plot_x
        << "' y2='" << py << "' stroke='#444'/>\n";
    const double label = panel.log_y ? std::pow(10.0, t) : t;
    out << "<text x='" << plot_x - 7 << "' y='" << py + 3
        << "' text-anchor='end' font-size='10'>" << fmt(label) << "</text>\n";
  }
  out << "<text x='" << plot_x + plot_w / 2 << "' y='" << y0 + kPanelH - 8
      << "' text-anchor='middle' font-size='11'>" << panel.x_label
      << "</text>\n";
  out << "<text x='" << x0 + 14 << "' y='" << plot_y + plot_h / 2
      << "' text-anchor='middle' font-size='11' transform='rotate(-90 "
      << x0 + 14 << ' ' << plot_y + plot_h / 2 << ")'>" << panel.y_label
      << "</text>\n";

  for (const auto& curve : panel.curves) {
    out << "<polyline fill='none' stroke='" << curve.color
        << "' stroke-width='" << curve.width << "' points='";
    bool open = false;
    for (std::size_t i = 0; i < curve.x.size(); ++i) {
      if (!usable(curve.x[i], panel.log_x) || !usable(curve.y[i], panel.log_y)) {
        if (open) {
          out << "'/>\n<polyline fill='none' stroke='" << curve.color
              << "' stroke-width='" << curve.width << "' points='";
          open = false;
        }
        continue;
      }
      out << map_x(curve.x[i]) << ',' << map_y(curve.y[i]) << ' ';
      open = true;
    }
    out << "'/>\n";
  }

  // Legend, top-right inside the plot.
  double ly = plot_y + 12;
  for (const auto& curve : panel.curves) {
    if (curve.label.empty()) continue;
    out << "<line x1='" << plot_x + plot_w - 108 << "' y1='" << ly - 3
        << "' x2='" << plot_x + plot_w - 92 << "' y2='" << ly - 3
        << "' stroke='" << curve.color << "' stroke-width='2'/>\n";
    out << "<text x='" << plot_x + plot_w - 88 << "' y='" << ly
        << "' font-size='10'>" << curve.label << "</text>\n";
    ly += 13;
  }
}

}  // namespace

const std::vector<std::string>& palette() {
  static const std::vector<std::string> colors = {
      "#1f77b4", "#d62728", "#2ca02c", "#9467bd",
      "#ff7f0e", "#8c564b", "#7f7f7f", "#17becf"};
  return colors;
}

void write_figure(const std::filesystem::path& path, const std::string& title,
                  const std::vector<Panel>& panels, std::size_t columns) {
  columns = std::max<std::size_t>(1, columns);
  const std::size_t rows = (panels.size() + columns - 1) / columns;
  const double width = kPanelW * static_cast<double>(columns);
  const double height = kPanelH * static_cast<double>(rows) + 26.0;

  std::ostringstream out;
  out << "<svg xmlns='http://www.w3.org/2000/svg' width='" << width
      << "' height='" << height << "' font-family='sans-serif'>\n";
  out << "<rect width='100%' height='100%' fill='white'/>\n";
  out << "<text x='" << width / 2
      << "' y='18' text-anchor='middle' font-size='15' font-weight='bold'>"
      << title << "</text>\n";
  for (std::size_t i = 0; i < panels.size(); ++i) {
    const double x0 = static_cast<double>(i % columns) * kPanelW;
    const double y0 = 26.0 + static_cast<double>(i / columns) * kPanelH;
    render_panel(out, panels[i], x0, y0);
  }
  out << "</svg>\n";
  csv::write_text_atomic(path, out.str());
}

}  // namespace ergo::svg
