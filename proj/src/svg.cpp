#include "pentalimit/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace pentalimit {

namespace {

std::string f6(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  // Avoid the two encodings of zero.
  std::string s(buf);
  if (s == "-0.000000") s = "0.000000";
  return s;
}

const char* const kPalette[] = {"#1b6ca8", "#c0392b", "#1e8449", "#8e44ad",
                                "#b9770e", "#148f77", "#5d6d7e"};

}  // namespace

std::string render_svg(const std::vector<Polygon<double>>& rings,
                       const std::optional<Point2<double>>& marker) {
  if (rings.empty())
    throw Error(ErrorCode::InvalidInput, "nothing to render");

  double xmin = rings[0].at(0).x, xmax = xmin;
  double ymin = -rings[0].at(0).y, ymax = ymin;
  for (const auto& ring : rings)
    for (const auto& p : ring.vertices()) {
      xmin = std::min(xmin, p.x);
      xmax = std::max(xmax, p.x);
      ymin = std::min(ymin, -p.y);
      ymax = std::max(ymax, -p.y);
    }
  const double span = std::max({xmax - xmin, ymax - ymin, 1e-6});
  const double margin = 0.05 * span;
  xmin -= margin;
  ymin -= margin;
  const double w = (xmax - xmin) + margin;
  const double h = (ymax - ymin) + margin;
  const double stroke = 0.008 * span;

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
         "width=\"640\" height=\"640\" viewBox=\""
      << f6(xmin) << " " << f6(ymin) << " " << f6(w) << " " << f6(h)
      << "\">\n";
  out << "  <g fill=\"none\" stroke-width=\"" << f6(stroke)
      << "\" stroke-linejoin=\"round\">\n";
  for (std::size_t k = 0; k < rings.size(); ++k) {
    out << "    <polygon stroke=\""
        << kPalette[k % (sizeof kPalette / sizeof *kPalette)] << "\" points=\"";
    bool first = true;
    for (const auto& p : rings[k].vertices()) {
      if (!first) out << " ";
      out << f6(p.x) << "," << f6(-p.y);
      first = false;
    }
    out << "\"/>\n";
  }
  out << "  </g>\n";
  if (marker) {
    const double r = 0.015 * span;
    const double mx = marker->x, my = -marker->y;
    out << "  <g stroke=\"#000000\" stroke-width=\"" << f6(0.5 * stroke)
        << "\">\n";
    out << "    <circle cx=\"" << f6(mx) << "\" cy=\"" << f6(my) << "\" r=\""
        << f6(r) << "\" fill=\"none\"/>\n";
    out << "    <line x1=\"" << f6(mx - r) << "\" y1=\"" << f6(my)
        << "\" x2=\"" << f6(mx + r) << "\" y2=\"" << f6(my) << "\"/>\n";
    out << "    <line x1=\"" << f6(mx) << "\" y1=\"" << f6(my - r)
        << "\" x2=\"" << f6(mx) << "\" y2=\"" << f6(my + r) << "\"/>\n";
    out << "  </g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace pentalimit
