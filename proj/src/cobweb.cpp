#include "sharkovsky/cobweb.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <vector>

namespace sharkovsky {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

}  // namespace

std::string cobweb_svg(const RealMap& f, double start, int iterations, int size) {
  require(iterations >= 0, ErrorKind::kInvalidArgument, "negative iteration count");
  require(f.domain().contains(start), ErrorKind::kDomainViolation, "start point outside domain");
  const auto dom = f.domain();
  const int samples = 400;
  std::vector<std::pair<double, double>> graph;
  double lo = dom.lo;
  double hi = dom.hi;
  for (int i = 0; i <= samples; ++i) {
    const double x = dom.lo + (dom.hi - dom.lo) * i / samples;
    const double y = f(x);
    graph.emplace_back(x, y);
    lo = std::min(lo, y);
    hi = std::max(hi, y);
  }
  const double margin = 20.0;
  const double scale = (size - 2 * margin) / (hi - lo > 0 ? hi - lo : 1.0);
  auto px = [&](double x) { return fmt(margin + (x - lo) * scale); };
  auto py = [&](double y) { return fmt(size - margin - (y - lo) * scale); };

  std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(size) + "\" height=\"" +
                    std::to_string(size) + "\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg += "<line x1=\"" + px(lo) + "\" y1=\"" + py(lo) + "\" x2=\"" + px(hi) + "\" y2=\"" + py(hi) +
         "\" stroke=\"gray\" stroke-dasharray=\"4 3\"/>\n";
  svg += "<path fill=\"none\" stroke=\"black\" d=\"";
  for (std::size_t i = 0; i < graph.size(); ++i) {
    svg += (i ? " L" : "M") + px(graph[i].first) + " " + py(graph[i].second);
  }
  svg += "\"/>\n<path fill=\"none\" stroke=\"crimson\" d=\"M" + px(start) + " " + py(lo);
  double x = start;
  for (int k = 0; k < iterations; ++k) {
    auto y = f.try_eval(x);
    if (!y) break;
    svg += " L" + px(x) + " " + py(*y) + " L" + px(*y) + " " + py(*y);
    if (!dom.contains(*y)) break;
    x = *y;
  }
  svg += "\"/>\n</svg>\n";
  return svg;
}

}  // namespace sharkovsky
