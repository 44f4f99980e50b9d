// Copyright 2026 The penta Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "penta/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <vector>

#include "penta/closed_form.hpp"

namespace penta {
namespace {

std::string Fmt(double v, int decimals = 2) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  return buf;
}

struct Frame {
  double x0, x1, y0, y1;  // data range in log10 units
  double left, right, top, bottom;

  double X(double lx) const { return left + (lx - x0) / (x1 - x0) * (right - left); }
  double Y(double ly) const { return bottom - (ly - y0) / (y1 - y0) * (bottom - top); }
};

void Line(std::ostream& out, double xa, double ya, double xb, double yb, const char* style) {
  out << "<line x1=\"" << Fmt(xa) << "\" y1=\"" << Fmt(ya) << "\" x2=\"" << Fmt(xb) << "\" y2=\""
      << Fmt(yb) << "\" " << style << "/>\n";
}

void Text(std::ostream& out, double x, double y, const std::string& s, const char* extra = "") {
  out << "<text x=\"" << Fmt(x) << "\" y=\"" << Fmt(y) << "\" font-family=\"sans-serif\" "
      << "font-size=\"12\" " << extra << ">" << s << "</text>\n";
}

// Line of the given slope through the centroid of the series, clipped to x range.
void ReferenceLine(std::ostream& out, const Frame& f, const std::vector<double>& lx,
                   const std::vector<double>& ly, double slope, const char* style) {
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    mx += lx[i];
    my += ly[i];
  }
  mx /= lx.size();
  my /= ly.size();
  Line(out, f.X(f.x0), f.Y(my + slope * (f.x0 - mx)), f.X(f.x1), f.Y(my + slope * (f.x1 - mx)), style);
}

}  // namespace

void WriteScalingSvg(std::ostream& out, std::span<const ScalingPoint> series, const PlotOptions& options) {
  const double reference = static_cast<double>(Exponent());
  std::vector<double> lx, la, ld;
  for (const ScalingPoint& p : series) {
    lx.push_back(std::log10(static_cast<double>(p.n)));
    la.push_back(std::log10(static_cast<double>(p.apl)));
    ld.push_back(std::log10(static_cast<double>(p.diameter)));
  }

  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<!-- penta scaling plot v1 -->\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << options.width << "\" height=\""
      << options.height << "\" viewBox=\"0 0 " << options.width << " " << options.height << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  Text(out, options.width / 2.0, 22, options.title, "text-anchor=\"middle\" font-weight=\"bold\"");

  if (series.empty()) {
    Text(out, options.width / 2.0, options.height / 2.0, "warning: no data points",
         "text-anchor=\"middle\" fill=\"#b00\"");
    out << "</svg>\n";
    return;
  }

  Frame f{};
  f.left = 70;
  f.right = options.width - 20.0;
  f.top = 40;
  f.bottom = options.height - 60.0;
  f.x0 = std::floor(*std::min_element(lx.begin(), lx.end()));
  f.x1 = std::ceil(*std::max_element(lx.begin(), lx.end()));
  if (f.x1 <= f.x0) f.x1 = f.x0 + 1;
  f.y0 = std::floor(std::min(*std::min_element(la.begin(), la.end()), *std::min_element(ld.begin(), ld.end())));
  f.y1 = std::ceil(std::max(*std::max_element(la.begin(), la.end()), *std::max_element(ld.begin(), ld.end())));
  if (f.y1 <= f.y0) f.y1 = f.y0 + 1;

  const char* axis = "stroke=\"black\" stroke-width=\"1\"";
  const char* grid = "stroke=\"#ddd\" stroke-width=\"1\"";
  Line(out, f.left, f.bottom, f.right, f.bottom, axis);
  Line(out, f.left, f.bottom, f.left, f.top, axis);
  for (int e = static_cast<int>(f.x0); e <= static_cast<int>(f.x1); ++e) {
    Line(out, f.X(e), f.bottom, f.X(e), f.top, grid);
    Text(out, f.X(e), f.bottom + 16, "1e" + std::to_string(e), "text-anchor=\"middle\"");
  }
  for (int e = static_cast<int>(f.y0); e <= static_cast<int>(f.y1); ++e) {
    Line(out, f.left, f.Y(e), f.right, f.Y(e), grid);
    Text(out, f.left - 6, f.Y(e) + 4, "1e" + std::to_string(e), "text-anchor=\"end\"");
  }
  Text(out, (f.left + f.right) / 2, options.height - 24.0, "order N", "text-anchor=\"middle\"");
  Text(out, 16, (f.top + f.bottom) / 2, "length", "transform=\"rotate(-90 16 240)\"");

  ReferenceLine(out, f, lx, la, reference, "stroke=\"#1f77b4\" stroke-dasharray=\"4 3\"");
  ReferenceLine(out, f, lx, ld, reference, "stroke=\"#d62728\" stroke-dasharray=\"4 3\"");
  for (std::size_t i = 0; i < lx.size(); ++i) {
    out << "<circle cx=\"" << Fmt(f.X(lx[i])) << "\" cy=\"" << Fmt(f.Y(la[i]))
        << "\" r=\"3\" fill=\"#1f77b4\"/>\n";
    out << "<rect x=\"" << Fmt(f.X(lx[i]) - 3) << "\" y=\"" << Fmt(f.Y(ld[i]) - 3)
        << "\" width=\"6\" height=\"6\" fill=\"#d62728\"/>\n";
  }

  double ty = f.top + 16;
  Text(out, f.left + 10, ty, "reference slope ln(1+sqrt3)/ln5 = " + Fmt(reference, 6) + " (dashed)");
  const int t_hi = series.back().t;
  const int t_lo = options.fit_from >= 0 ? options.fit_from : t_hi / 2;
  const auto fitted = std::count_if(series.begin(), series.end(),
                                    [&](const ScalingPoint& p) { return p.t >= t_lo; });
  if (fitted >= 2) {
    const ScalingSlopes s = FitScaling(series, t_lo, t_hi);
    const std::string range = " (t=" + std::to_string(t_lo) + ".." + std::to_string(t_hi) + ")";
    Text(out, f.left + 10, ty += 16, "APL fitted slope = " + Fmt(static_cast<double>(s.apl.slope), 6) + range,
         "fill=\"#1f77b4\"");
    Text(out, f.left + 10, ty += 16,
         "diameter fitted slope = " + Fmt(static_cast<double>(s.diameter.slope), 6) + range, "fill=\"#d62728\"");
  }
  if (series.size() < 3) {
    Text(out, f.left + 10, ty += 16,
         "warning: only " + std::to_string(series.size()) + " points, slope is degenerate",
         "fill=\"#b00\"");
  }
  out << "</svg>\n";
}

}  // namespace penta
