#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

namespace asharp {

struct SvgSeries {
  std::string label;
  std::string color = "#1f6feb";
  bool dashed = false;
  std::vector<std::pair<double, double>> pts;  // already in plot coordinates
};

// Minimal static line chart (used for log2-log2 decay/growth plots; callers
// pass log-transformed coordinates). Output depends only on the inputs.
inline void write_line_svg(std::ostream& os, const std::string& title,
                           const std::string& xlabel, const std::string& ylabel,
                           const std::vector<SvgSeries>& series) {
  const double W = 720, H = 480, L = 70, R = 20, T = 40, B = 50;
  double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
  for (const auto& s : series)
    for (auto [x, y] : s.pts) {
      xmin = std::min(xmin, x);
      xmax = std::max(xmax, x);
      ymin = std::min(ymin, y);
      ymax = std::max(ymax, y);
    }
  if (!(xmax > xmin)) {
    xmin -= 1;
    xmax += 1;
  }
  if (!(ymax > ymin)) {
    ymin -= 1;
    ymax += 1;
  }
  double ypad = 0.05 * (ymax - ymin);
  ymin -= ypad;
  ymax += ypad;
  auto fmt = [](double v) {
    char b[32];
    std::snprintf(b, sizeof b, "%.4g", v);
    return std::string(b);
  };
  auto px = [&](double x) { return L + (x - xmin) / (xmax - xmin) * (W - L - R); };
  auto py = [&](double y) { return H - B - (y - ymin) / (ymax - ymin) * (H - T - B); };

  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << W << " " << H
     << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  os << "<rect width=\"" << W << "\" height=\"" << H << "\" fill=\"white\"/>\n";
  os << "<text x=\"" << W / 2 << "\" y=\"22\" text-anchor=\"middle\" font-size=\"15\">" << title
     << "</text>\n";
  // frame
  os << "<rect x=\"" << L << "\" y=\"" << T << "\" width=\"" << W - L - R << "\" height=\""
     << H - T - B << "\" fill=\"none\" stroke=\"#888\"/>\n";
  // ticks: 5 per axis
  for (int i = 0; i <= 4; ++i) {
    double fx = xmin + (xmax - xmin) * i / 4.0;
    double fy = ymin + (ymax - ymin) * i / 4.0;
    os << "<line x1=\"" << px(fx) << "\" y1=\"" << H - B << "\" x2=\"" << px(fx) << "\" y2=\""
       << H - B + 5 << "\" stroke=\"#888\"/>\n";
    os << "<text x=\"" << px(fx) << "\" y=\"" << H - B + 18 << "\" text-anchor=\"middle\">"
       << fmt(fx) << "</text>\n";
    os << "<line x1=\"" << L - 5 << "\" y1=\"" << py(fy) << "\" x2=\"" << L << "\" y2=\""
       << py(fy) << "\" stroke=\"#888\"/>\n";
    os << "<text x=\"" << L - 8 << "\" y=\"" << py(fy) + 4 << "\" text-anchor=\"end\">" << fmt(fy)
       << "</text>\n";
  }
  os << "<text x=\"" << (L + W - R) / 2 << "\" y=\"" << H - 12
     << "\" text-anchor=\"middle\">" << xlabel << "</text>\n";
  os << "<text x=\"16\" y=\"" << (T + H - B) / 2
     << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 " << (T + H - B) / 2 << ")\">"
     << ylabel << "</text>\n";
  double ly = T + 14;
  for (const auto& s : series) {
    if (s.pts.empty()) continue;
    os << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"1.6\"";
    if (s.dashed) os << " stroke-dasharray=\"6 4\"";
    os << " points=\"";
    for (auto [x, y] : s.pts) os << px(x) << "," << py(y) << " ";
    os << "\"/>\n";
    for (auto [x, y] : s.pts)
      if (!s.dashed)
        os << "<circle cx=\"" << px(x) << "\" cy=\"" << py(y) << "\" r=\"2.5\" fill=\""
           << s.color << "\"/>\n";
    os << "<line x1=\"" << W - R - 150 << "\" y1=\"" << ly << "\" x2=\"" << W - R - 120
       << "\" y2=\"" << ly << "\" stroke=\"" << s.color << "\" stroke-width=\"1.6\"";
    if (s.dashed) os << " stroke-dasharray=\"6 4\"";
    os << "/>\n";
    os << "<text x=\"" << W - R - 114 << "\" y=\"" << ly + 4 << "\">" << s.label << "</text>\n";
    ly += 16;
  }
  os << "</svg>\n";
}

}  // namespace asharp
