// svg.hpp — self-contained log-log scatter plots with fitted and reference
// slope lines. Output bytes are deterministic for a fixed input: fixed-width
// number formatting, no timestamps.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "congestion_lab/analysis.hpp"

namespace conlab {

namespace detail {

inline std::string fmt2(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

inline std::string fmt3(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  return buf;
}

}  // namespace detail

// points are (N, T) in linear scale; both must be positive.
inline std::string render_loglog_svg(std::span<const std::pair<double, double>> points,
                                     const std::optional<ScalingFit>& fit,
                                     std::span<const double> reference_slopes,
                                     const std::string& title) {
  if (points.empty()) throw std::invalid_argument("plot: no data points");
  const double W = 640, H = 480, ml = 70, mr = 20, mt = 40, mb = 50;
  double lx_min = std::log10(points[0].first), lx_max = lx_min;
  double ly_min = std::log10(points[0].second), ly_max = ly_min;
  for (auto [x, y] : points) {
    if (!(x > 0.0) || !(y > 0.0)) throw std::invalid_argument("plot: points must be positive");
    lx_min = std::min(lx_min, std::log10(x));
    lx_max = std::max(lx_max, std::log10(x));
    ly_min = std::min(ly_min, std::log10(y));
    ly_max = std::max(ly_max, std::log10(y));
  }
  // pad degenerate ranges so a single point still renders
  if (lx_max - lx_min < 1e-9) {
    lx_min -= 0.5;
    lx_max += 0.5;
  }
  if (ly_max - ly_min < 1e-9) {
    ly_min -= 0.5;
    ly_max += 0.5;
  }
  double padx = 0.06 * (lx_max - lx_min), pady = 0.08 * (ly_max - ly_min);
  lx_min -= padx;
  lx_max += padx;
  ly_min -= pady;
  ly_max += pady;
  auto px = [&](double lx) { return ml + (lx - lx_min) / (lx_max - lx_min) * (W - ml - mr); };
  auto py = [&](double ly) { return H - mb - (ly - ly_min) / (ly_max - ly_min) * (H - mt - mb); };

  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"480\" "
       "viewBox=\"0 0 640 480\">\n";
  s << "<rect x=\"0\" y=\"0\" width=\"640\" height=\"480\" fill=\"white\"/>\n";
  s << "<rect x=\"" << detail::fmt2(ml) << "\" y=\"" << detail::fmt2(mt) << "\" width=\""
    << detail::fmt2(W - ml - mr) << "\" height=\"" << detail::fmt2(H - mt - mb)
    << "\" fill=\"none\" stroke=\"black\"/>\n";
  s << "<text x=\"" << detail::fmt2(W / 2) << "\" y=\"24\" text-anchor=\"middle\" "
       "font-family=\"monospace\" font-size=\"14\">"
    << title << "</text>\n";

  // decade grid lines
  for (int d = static_cast<int>(std::ceil(lx_min)); d <= static_cast<int>(std::floor(lx_max));
       ++d) {
    double x = px(d);
    s << "<line x1=\"" << detail::fmt2(x) << "\" y1=\"" << detail::fmt2(mt) << "\" x2=\""
      << detail::fmt2(x) << "\" y2=\"" << detail::fmt2(H - mb)
      << "\" stroke=\"#dddddd\"/>\n";
    s << "<text x=\"" << detail::fmt2(x) << "\" y=\"" << detail::fmt2(H - mb + 16)
      << "\" text-anchor=\"middle\" font-family=\"monospace\" font-size=\"11\">1e" << d
      << "</text>\n";
  }
  for (int d = static_cast<int>(std::ceil(ly_min)); d <= static_cast<int>(std::floor(ly_max));
       ++d) {
    double y = py(d);
    s << "<line x1=\"" << detail::fmt2(ml) << "\" y1=\"" << detail::fmt2(y) << "\" x2=\""
      << detail::fmt2(W - mr) << "\" y2=\"" << detail::fmt2(y) << "\" stroke=\"#dddddd\"/>\n";
    s << "<text x=\"" << detail::fmt2(ml - 6) << "\" y=\"" << detail::fmt2(y + 4)
      << "\" text-anchor=\"end\" font-family=\"monospace\" font-size=\"11\">1e" << d
      << "</text>\n";
  }
  s << "<text x=\"" << detail::fmt2(W / 2) << "\" y=\"" << detail::fmt2(H - 12)
    << "\" text-anchor=\"middle\" font-family=\"monospace\" font-size=\"12\">N</text>\n";
  s << "<text x=\"18\" y=\"" << detail::fmt2(H / 2)
    << "\" text-anchor=\"middle\" font-family=\"monospace\" font-size=\"12\" "
       "transform=\"rotate(-90 18 "
    << detail::fmt2(H / 2) << ")\">max load</text>\n";

  // reference slopes through the data centroid (log space), dashed
  double cx = 0.0, cy = 0.0;
  for (auto [x, y] : points) {
    cx += std::log10(x);
    cy += std::log10(y);
  }
  cx /= static_cast<double>(points.size());
  cy /= static_cast<double>(points.size());
  for (size_t i = 0; i < reference_slopes.size(); ++i) {
    double m = reference_slopes[i];
    double y1 = cy + m * (lx_min - cx), y2 = cy + m * (lx_max - cx);
    s << "<line x1=\"" << detail::fmt2(px(lx_min)) << "\" y1=\"" << detail::fmt2(py(y1))
      << "\" x2=\"" << detail::fmt2(px(lx_max)) << "\" y2=\"" << detail::fmt2(py(y2))
      << "\" stroke=\"#888888\" stroke-dasharray=\"6 4\"/>\n";
    s << "<text x=\"" << detail::fmt2(W - mr - 4) << "\" y=\""
      << detail::fmt2(py(y2) - 4) << "\" text-anchor=\"end\" font-family=\"monospace\" "
         "font-size=\"11\" fill=\"#888888\">slope "
      << detail::fmt2(m) << "</text>\n";
  }

  // fitted line (natural-log fit converts directly to log10 axes)
  if (fit) {
    auto ly_of = [&](double lx) {
      double lnx = lx * std::log(10.0);
      double lny = fit->intercept + fit->slope * lnx;
      return lny / std::log(10.0);
    };
    s << "<line x1=\"" << detail::fmt2(px(lx_min)) << "\" y1=\""
      << detail::fmt2(py(ly_of(lx_min))) << "\" x2=\"" << detail::fmt2(px(lx_max))
      << "\" y2=\"" << detail::fmt2(py(ly_of(lx_max))) << "\" stroke=\"#cc3333\"/>\n";
    s << "<text x=\"" << detail::fmt2(ml + 8) << "\" y=\"" << detail::fmt2(mt + 18)
      << "\" font-family=\"monospace\" font-size=\"12\" fill=\"#cc3333\">fit slope = "
      << detail::fmt3(fit->slope) << " (r2 = " << detail::fmt3(fit->r_squared)
      << ")</text>\n";
  }

  for (auto [x, y] : points) {
    s << "<circle cx=\"" << detail::fmt2(px(std::log10(x))) << "\" cy=\""
      << detail::fmt2(py(std::log10(y))) << "\" r=\"3.5\" fill=\"#2255aa\"/>\n";
  }
  s << "</svg>\n";
  return s.str();
}

}  // namespace conlab
