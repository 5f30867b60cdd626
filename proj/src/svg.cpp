#include "ccl/svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace ccl::svg {

namespace {

constexpr double kWidth = 800;
constexpr double kHeight = 480;
constexpr double kLeft = 70;
constexpr double kRight = 20;
constexpr double kTop = 40;
constexpr double kBottom = 50;

std::string fixed(double v, int digits = 2) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

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

std::string tick_label(double v) {
  if (std::abs(v) >= 1000 || v == std::floor(v)) return fixed(v, 0);
  return fixed(v, std::abs(v) >= 10 ? 1 : 2);
}

}  // namespace

std::string palette(std::size_t i) {
  static constexpr std::array<const char*, 8> colors = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                                        "#9467bd", "#8c564b", "#e377c2", "#7f7f7f"};
  return colors[i % colors.size()];
}

std::string render(const Plot& plot) {
  double x_min = std::numeric_limits<double>::infinity();
  double x_max = -x_min;
  double y_min = x_min;
  double y_max = -x_min;
  for (const auto& s : plot.series) {
    for (auto [x, y] : s.points) {
      x_min = std::min(x_min, x);
      x_max = std::max(x_max, x);
      y_min = std::min(y_min, y);
      y_max = std::max(y_max, y);
    }
  }
  if (!std::isfinite(x_min)) x_min = 0, x_max = 1, y_min = 0, y_max = 1;
  if (x_max == x_min) x_max = x_min + 1;
  if (y_max == y_min) y_max = y_min + 1;
  const double pad = (y_max - y_min) * 0.05;
  y_min -= pad;
  y_max += pad;

  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  auto px = [&](double x) { return kLeft + (x - x_min) / (x_max - x_min) * plot_w; };
  auto py = [&](double y) { return kTop + (1.0 - (y - y_min) / (y_max - y_min)) * plot_h; };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"480\" viewBox=\"0 0 800 480\">\n";
  os << "<rect x=\"0\" y=\"0\" width=\"800\" height=\"480\" fill=\"#ffffff\"/>\n";
  os << "<text x=\"400\" y=\"24\" font-family=\"sans-serif\" font-size=\"16\" text-anchor=\"middle\">"
     << escape(plot.title) << "</text>\n";
  os << "<rect x=\"" << fixed(kLeft) << "\" y=\"" << fixed(kTop) << "\" width=\"" << fixed(plot_w) << "\" height=\""
     << fixed(plot_h) << "\" fill=\"none\" stroke=\"#000000\"/>\n";

  for (int i = 0; i <= 4; ++i) {
    const double fx = x_min + (x_max - x_min) * i / 4.0;
    const double fy = y_min + (y_max - y_min) * i / 4.0;
    os << "<text x=\"" << fixed(px(fx)) << "\" y=\"" << fixed(kHeight - kBottom + 18)
       << "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">" << tick_label(fx) << "</text>\n";
    os << "<text x=\"" << fixed(kLeft - 6) << "\" y=\"" << fixed(py(fy) + 4)
       << "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"end\">" << tick_label(fy) << "</text>\n";
  }
  os << "<text x=\"" << fixed(kLeft + plot_w / 2) << "\" y=\"" << fixed(kHeight - 8)
     << "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">" << escape(plot.x_label) << "</text>\n";
  os << "<text x=\"16\" y=\"" << fixed(kTop + plot_h / 2) << "\" font-family=\"sans-serif\" font-size=\"12\" "
     << "text-anchor=\"middle\" transform=\"rotate(-90 16 " << fixed(kTop + plot_h / 2) << ")\">"
     << escape(plot.y_label) << "</text>\n";

  for (std::size_t si = 0; si < plot.series.size(); ++si) {
    const auto& s = plot.series[si];
    os << "<g id=\"series-" << si << "\">\n";
    if (s.style != SeriesStyle::Markers && s.points.size() > 1) {
      os << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"1.5\" points=\"";
      for (std::size_t i = 0; i < s.points.size(); ++i) {
        if (i) os << ' ';
        os << fixed(px(s.points[i].first)) << ',' << fixed(py(s.points[i].second));
      }
      os << "\"/>\n";
    }
    if (s.style != SeriesStyle::Line) {
      for (auto [x, y] : s.points) {
        os << "<circle cx=\"" << fixed(px(x)) << "\" cy=\"" << fixed(py(y)) << "\" r=\"3\" fill=\"" << s.color
           << "\"/>\n";
      }
    }
    const double ly = kTop + 14 + 16 * static_cast<double>(si);
    os << "<text x=\"" << fixed(kLeft + 10) << "\" y=\"" << fixed(ly) << "\" font-family=\"sans-serif\" font-size=\"11\" fill=\""
       << s.color << "\">" << escape(s.name) << "</text>\n";
    os << "</g>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace ccl::svg
