#include "cli/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <span>

namespace iet::cli {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v == 0.0 ? 0.0 : v);
  return buf;
}

std::string polyline(std::span<const Point> chain, const char* id, const char* stroke, const char* dash) {
  std::string pts;
  for (const auto& p : chain) {
    if (!pts.empty()) pts += ' ';
    pts += num(to_double(p.x)) + "," + num(-to_double(p.y));
  }
  std::string out = "  <polyline id=\"" + std::string(id) + "\" points=\"" + pts + "\" fill=\"none\" stroke=\"" +
                    stroke + "\" stroke-width=\"1\" vector-effect=\"non-scaling-stroke\"";
  if (dash) out += " stroke-dasharray=\"" + std::string(dash) + "\"";
  return out + "/>\n";
}

}  // namespace

std::string render_svg(const SuspensionDiagram& diagram, const IntersectionReport& report) {
  double min_x = 0, max_x = 0, min_y = 0, max_y = 0;
  for (auto chain : {diagram.top_chain(), diagram.bottom_chain()}) {
    for (const auto& p : chain) {
      const double x = to_double(p.x), y = -to_double(p.y);
      min_x = std::min(min_x, x);
      max_x = std::max(max_x, x);
      min_y = std::min(min_y, y);
      max_y = std::max(max_y, y);
    }
  }
  double width = max_x - min_x, height = max_y - min_y;
  // Flat diagrams (all heights zero) still need a visible box.
  if (height == 0) height = width;
  if (width == 0) width = height;
  const double mx = 0.05 * width, my = 0.05 * height;

  std::string svg = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" + num(min_x - mx) + " " +
         num(min_y - my) + " " + num(width + 2 * mx) + " " + num(height + 2 * my) + "\">\n";
  svg += polyline(diagram.top_chain(), "top-chain", "#1f5fbf", nullptr);
  svg += polyline(diagram.bottom_chain(), "bottom-chain", "#c0392b", "4 2");
  if (report.witness) {
    const auto& rel = report.witness->relation;
    const Point& mark = rel.point ? *rel.point : rel.overlap->from;
    const double r = 0.015 * std::max(width, height);
    svg += "  <circle class=\"witness\" cx=\"" + num(to_double(mark.x)) + "\" cy=\"" + num(-to_double(mark.y)) +
           "\" r=\"" + num(r) + "\" fill=\"none\" stroke=\"#000000\" vector-effect=\"non-scaling-stroke\"/>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace iet::cli
