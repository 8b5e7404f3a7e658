#include "btcarima/svg_plot.hpp"

#include "btcarima/report_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>

namespace btcarima {

namespace {

constexpr double kWidth = 860.0;
constexpr double kHeight = 420.0;
constexpr double kLeft = 80.0;
constexpr double kRight = 20.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 50.0;
constexpr const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd"};

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
    case '&': out += "&amp;"; break;
    case '<': out += "&lt;"; break;
    case '>': out += "&gt;"; break;
    case '"': out += "&quot;"; break;
    default: out += c;
    }
  }
  return out;
}

std::string num(double v) {
  // Coordinates only need 2 decimals.
  return format_number(std::round(v * 100.0) / 100.0);
}

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  void add(double v) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  void finish() {
    if (!std::isfinite(lo)) {
      lo = 0.0;
      hi = 1.0;
    }
    if (hi - lo <= 0.0) {
      const double pad = lo == 0.0 ? 1.0 : std::abs(lo) * 0.05;
      lo -= pad;
      hi += pad;
    }
  }
};

} // namespace

std::string render_svg(const PlotSpec& spec) {
  auto usable = [&](double x, double y) {
    return std::isfinite(x) && std::isfinite(y) && (!spec.log_y || y > 0.0);
  };
  auto ty = [&](double y) { return spec.log_y ? std::log10(y) : y; };

  Range xr;
  Range yr;
  for (const auto& s : spec.series) {
    for (std::size_t i = 0; i < std::min(s.x.size(), s.y.size()); ++i) {
      if (usable(s.x[i], s.y[i])) {
        xr.add(s.x[i]);
        yr.add(ty(s.y[i]));
      }
    }
  }
  xr.finish();
  yr.finish();

  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  auto px = [&](double x) { return kLeft + (x - xr.lo) / (xr.hi - xr.lo) * plot_w; };
  auto py = [&](double y) { return kTop + plot_h - (ty(y) - yr.lo) / (yr.hi - yr.lo) * plot_h; };

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kWidth) + "\" height=\"" +
         num(kHeight) + "\" viewBox=\"0 0 " + num(kWidth) + " " + num(kHeight) +
         "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out += "<text x=\"" + num(kWidth / 2) + "\" y=\"22\" text-anchor=\"middle\" font-size=\"15\">" +
         escape(spec.title) + "</text>\n";
  out += "<rect x=\"" + num(kLeft) + "\" y=\"" + num(kTop) + "\" width=\"" + num(plot_w) +
         "\" height=\"" + num(plot_h) + "\" fill=\"none\" stroke=\"#444\"/>\n";

  constexpr int kTicks = 5;
  for (int i = 0; i <= kTicks; ++i) {
    const double fx = xr.lo + (xr.hi - xr.lo) * i / kTicks;
    const double x = px(fx);
    out += "<line x1=\"" + num(x) + "\" y1=\"" + num(kTop + plot_h) + "\" x2=\"" + num(x) +
           "\" y2=\"" + num(kTop + plot_h + 5) + "\" stroke=\"#444\"/>\n";
    const double x_label = round_significant(std::round(fx * 1000) / 1000);
    out += "<text x=\"" + num(x) + "\" y=\"" + num(kTop + plot_h + 18) +
           "\" text-anchor=\"middle\">" + format_number(x_label) + "</text>\n";
    const double fy = yr.lo + (yr.hi - yr.lo) * i / kTicks;
    const double y_label = spec.log_y ? std::pow(10.0, fy) : fy;
    const double y = kTop + plot_h - plot_h * i / kTicks;
    out += "<line x1=\"" + num(kLeft - 5) + "\" y1=\"" + num(y) + "\" x2=\"" + num(kLeft) +
           "\" y2=\"" + num(y) + "\" stroke=\"#444\"/>\n";
    char buf[32];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, y_label, std::chars_format::general, 3);
    out += "<text x=\"" + num(kLeft - 8) + "\" y=\"" + num(y + 4) + "\" text-anchor=\"end\">" +
           std::string(buf, end) + "</text>\n";
  }
  out += "<text x=\"" + num(kLeft + plot_w / 2) + "\" y=\"" + num(kHeight - 10) +
         "\" text-anchor=\"middle\">" + escape(spec.x_label) + "</text>\n";
  out += "<text x=\"16\" y=\"" + num(kTop + plot_h / 2) +
         "\" text-anchor=\"middle\" transform=\"rotate(-90 16 " + num(kTop + plot_h / 2) + ")\">" +
         escape(spec.y_label) + (spec.log_y ? " (log)" : "") + "</text>\n";

  for (std::size_t k = 0; k < spec.series.size(); ++k) {
    const auto& s = spec.series[k];
    const char* color = kColors[k % std::size(kColors)];
    std::string points;
    auto flush = [&] {
      if (!points.empty()) {
        out += "<polyline fill=\"none\" stroke=\"" + std::string(color) +
               "\" stroke-width=\"1.2\" points=\"" + points + "\"/>\n";
        points.clear();
      }
    };
    for (std::size_t i = 0; i < std::min(s.x.size(), s.y.size()); ++i) {
      if (!usable(s.x[i], s.y[i])) {
        flush();
        continue;
      }
      if (s.markers) {
        out += "<circle cx=\"" + num(px(s.x[i])) + "\" cy=\"" + num(py(s.y[i])) +
               "\" r=\"2\" fill=\"" + color + "\"/>\n";
      } else {
        if (!points.empty()) {
          points += ' ';
        }
        points += num(px(s.x[i])) + "," + num(py(s.y[i]));
      }
    }
    flush();
    const double ly = kTop + 14 + 16 * static_cast<double>(k);
    out += "<text x=\"" + num(kLeft + plot_w - 8) + "\" y=\"" + num(ly) +
           "\" text-anchor=\"end\" fill=\"" + color + "\">" + escape(s.label) + "</text>\n";
  }
  out += "</svg>\n";
  return out;
}

} // namespace btcarima
