#pragma once

#include <string>
#include <utility>
#include <vector>

namespace ccl::svg {

enum class SeriesStyle { Line, Markers, LineAndMarkers };

struct Series {
  std::string name;
  std::vector<std::pair<double, double>> points;
  SeriesStyle style = SeriesStyle::Line;
  std::string color = "#1f77b4";
};

struct Plot {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::vector<Series> series;
};

/// Standalone SVG document with a fixed 800x480 viewport. Output is a pure
/// function of the plot (fixed-precision coordinates, no timestamps).
std::string render(const Plot& plot);

/// Palette entry i (cycles).
std::string palette(std::size_t i);

}  // namespace ccl::svg
