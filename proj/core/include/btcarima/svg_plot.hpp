#pragma once

#include <string>
#include <vector>

namespace btcarima {

struct PlotSeries {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
  bool markers = false;  ///< draw points instead of a polyline
};

struct PlotSpec {
  std::string title;
  std::string x_label;
  std::string y_label;
  bool log_y = false;
  std::vector<PlotSeries> series;
};

/// Self-contained SVG line chart. Non-finite points (and non-positive ones on
/// a log axis) are skipped and break the line.
[[nodiscard]] std::string render_svg(const PlotSpec& spec);

} // namespace btcarima
