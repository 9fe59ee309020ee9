#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "stylochron/errors.hpp"
#include "stylochron/text.hpp"

namespace stylochron {

namespace svg_detail {

inline constexpr double kWidth = 640.0;
inline constexpr double kHeight = 480.0;
inline constexpr double kMargin = 56.0;

struct Range {
  double lo = 0.0;
  double hi = 1.0;
};

inline Range pad_range(double lo, double hi) {
  if (!(hi > lo)) {
    double mid = lo;
    lo = mid - 1.0;
    hi = mid + 1.0;
  }
  double pad = 0.08 * (hi - lo);
  return {lo - pad, hi + pad};
}

inline double map_x(double v, const Range& r) {
  return kMargin + (v - r.lo) / (r.hi - r.lo) * (kWidth - 2.0 * kMargin);
}

inline double map_y(double v, const Range& r) {
  return kHeight - kMargin - (v - r.lo) / (r.hi - r.lo) * (kHeight - 2.0 * kMargin);
}

inline std::string xml_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

inline void open_svg(std::ostringstream& out, const std::string& title,
                     const std::string& timestamp) {
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 "
      << format_real(kWidth) << " " << format_real(kHeight) << "\">\n";
  if (!timestamp.empty()) out << "<!-- generated " << timestamp << " -->\n";
  out << "<rect width=\"" << format_real(kWidth) << "\" height=\""
      << format_real(kHeight) << "\" fill=\"white\"/>\n";
  out << "<text x=\"" << format_real(kWidth / 2.0)
      << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"16\">"
      << xml_escape(title) << "</text>\n";
}

inline void axes(std::ostringstream& out, const std::string& x_label,
                 const std::string& y_label) {
  out << "<line x1=\"" << format_real(kMargin) << "\" y1=\""
      << format_real(kHeight - kMargin) << "\" x2=\"" << format_real(kWidth - kMargin)
      << "\" y2=\"" << format_real(kHeight - kMargin)
      << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  out << "<line x1=\"" << format_real(kMargin) << "\" y1=\"" << format_real(kMargin)
      << "\" x2=\"" << format_real(kMargin) << "\" y2=\""
      << format_real(kHeight - kMargin)
      << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  out << "<text x=\"" << format_real(kWidth / 2.0) << "\" y=\""
      << format_real(kHeight - 16.0)
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">"
      << xml_escape(x_label) << "</text>\n";
  out << "<text x=\"18\" y=\"" << format_real(kHeight / 2.0)
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\" "
         "transform=\"rotate(-90 18 "
      << format_real(kHeight / 2.0) << ")\">" << xml_escape(y_label) << "</text>\n";
}

}  // namespace svg_detail

struct LabeledPoint {
  std::string label;
  double x = 0.0;
  double y = 0.0;
};

// Labeled scatter (the stylistic map of editions).
inline std::string svg_scatter(const std::vector<LabeledPoint>& points,
                               const std::string& title, const std::string& x_label,
                               const std::string& y_label,
                               const std::string& timestamp = std::string()) {
  using namespace svg_detail;
  if (points.empty()) throw MissingArtifactError("scatter plot needs points");
  double xlo = points[0].x, xhi = points[0].x, ylo = points[0].y, yhi = points[0].y;
  for (const auto& p : points) {
    xlo = std::min(xlo, p.x);
    xhi = std::max(xhi, p.x);
    ylo = std::min(ylo, p.y);
    yhi = std::max(yhi, p.y);
  }
  Range rx = pad_range(xlo, xhi), ry = pad_range(ylo, yhi);
  std::ostringstream out;
  open_svg(out, title, timestamp);
  axes(out, x_label, y_label);
  for (const auto& p : points) {
    double cx = map_x(p.x, rx), cy = map_y(p.y, ry);
    out << "<circle cx=\"" << format_real(cx) << "\" cy=\"" << format_real(cy)
        << "\" r=\"4\" fill=\"steelblue\"/>\n";
    out << "<text x=\"" << format_real(cx + 7.0) << "\" y=\"" << format_real(cy - 7.0)
        << "\" font-family=\"sans-serif\" font-size=\"11\">" << xml_escape(p.label)
        << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

// Scatter plus least-squares line (stylistic change vs review counts).
inline std::string svg_scatter_with_fit(const std::vector<LabeledPoint>& points,
                                        const std::string& title,
                                        const std::string& x_label,
                                        const std::string& y_label,
                                        const std::string& timestamp = std::string()) {
  using namespace svg_detail;
  if (points.size() < 2) {
    throw MissingArtifactError("fit plot needs at least two points");
  }
  double mx = 0.0, my = 0.0;
  for (const auto& p : points) {
    mx += p.x;
    my += p.y;
  }
  mx /= static_cast<double>(points.size());
  my /= static_cast<double>(points.size());
  double sxx = 0.0, sxy = 0.0;
  for (const auto& p : points) {
    sxx += (p.x - mx) * (p.x - mx);
    sxy += (p.x - mx) * (p.y - my);
  }
  double slope = sxx == 0.0 ? 0.0 : sxy / sxx;
  double intercept = my - slope * mx;

  double xlo = points[0].x, xhi = points[0].x, ylo = points[0].y, yhi = points[0].y;
  for (const auto& p : points) {
    xlo = std::min(xlo, p.x);
    xhi = std::max(xhi, p.x);
    ylo = std::min(ylo, p.y);
    yhi = std::max(yhi, p.y);
  }
  ylo = std::min({ylo, slope * xlo + intercept, slope * xhi + intercept});
  yhi = std::max({yhi, slope * xlo + intercept, slope * xhi + intercept});
  Range rx = pad_range(xlo, xhi), ry = pad_range(ylo, yhi);

  std::ostringstream out;
  open_svg(out, title, timestamp);
  axes(out, x_label, y_label);
  out << "<line x1=\"" << format_real(map_x(xlo, rx)) << "\" y1=\""
      << format_real(map_y(slope * xlo + intercept, ry)) << "\" x2=\""
      << format_real(map_x(xhi, rx)) << "\" y2=\""
      << format_real(map_y(slope * xhi + intercept, ry))
      << "\" stroke=\"firebrick\" stroke-width=\"1.5\"/>\n";
  for (const auto& p : points) {
    double cx = map_x(p.x, rx), cy = map_y(p.y, ry);
    out << "<circle cx=\"" << format_real(cx) << "\" cy=\"" << format_real(cy)
        << "\" r=\"4\" fill=\"steelblue\"/>\n";
    out << "<text x=\"" << format_real(cx + 7.0) << "\" y=\"" << format_real(cy - 7.0)
        << "\" font-family=\"sans-serif\" font-size=\"11\">" << xml_escape(p.label)
        << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

// Rolling-mean polyline over narrative time (x = window start / series length).
inline std::string svg_polyline(const std::vector<double>& values,
                                std::size_t series_length, const std::string& title,
                                const std::string& x_label, const std::string& y_label,
                                const std::string& timestamp = std::string()) {
  using namespace svg_detail;
  if (values.empty()) throw MissingArtifactError("narrative plot needs values");
  double ylo = values[0], yhi = values[0];
  for (double v : values) {
    ylo = std::min(ylo, v);
    yhi = std::max(yhi, v);
  }
  Range rx = pad_range(0.0, 1.0), ry = pad_range(ylo, yhi);
  std::ostringstream out;
  open_svg(out, title, timestamp);
  axes(out, x_label, y_label);
  out << "<polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"1.5\" points=\"";
  const double denom = static_cast<double>(std::max<std::size_t>(series_length, 1));
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out << ' ';
    double frac = static_cast<double>(i) / denom;
    out << format_real(map_x(frac, rx)) << ',' << format_real(map_y(values[i], ry));
  }
  out << "\"/>\n</svg>\n";
  return out.str();
}

}  // namespace stylochron
