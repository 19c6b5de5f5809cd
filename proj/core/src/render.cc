#include "cra/render.h"

#include <algorithm>
#include <cstdio>

#include "cra/error.h"

namespace cra {

std::string RenderSvg(const Instance& inst, const SolveReport& report,
                      int width_px) {
  if (!inst.metric.is_euclidean()) {
    throw Error(ErrorCode::kInvalidArgument,
                "rendering needs point coordinates (points instance)");
  }
  const auto pts = inst.metric.points();
  const auto& radii = report.assignment.radii;
  if (static_cast<int>(radii.size()) != inst.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "report does not match the instance size");
  }
  double min_x = pts[0].x, max_x = pts[0].x, min_y = pts[0].y, max_y = pts[0].y;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    min_x = std::min(min_x, pts[i].x - radii[i]);
    max_x = std::max(max_x, pts[i].x + radii[i]);
    min_y = std::min(min_y, pts[i].y - radii[i]);
    max_y = std::max(max_y, pts[i].y + radii[i]);
  }
  const double span = std::max({max_x - min_x, max_y - min_y, 1e-12});
  const double margin = 0.05 * span;
  const double scale = width_px / (span + 2 * margin);
  const int height_px =
      static_cast<int>((max_y - min_y + 2 * margin) * scale + 0.5);
  // SVG y grows downwards.
  auto sx = [&](double x) { return (x - min_x + margin) * scale; };
  auto sy = [&](double y) { return (max_y - y + margin) * scale; };

  std::string out;
  char buf[256];
  std::snprintf(buf, sizeof(buf),
                "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%d\" "
                "height=\"%d\" viewBox=\"0 0 %d %d\">\n",
                width_px, height_px, width_px, height_px);
  out += buf;
  std::snprintf(buf, sizeof(buf),
                "<title>%s: sum of radii %.6g</title>\n"
                "<rect width=\"100%%\" height=\"100%%\" fill=\"white\"/>\n",
                report.method.c_str(), report.value);
  out += buf;
  if (report.tree) {
    for (const auto& [u, v] : report.tree->edges()) {
      std::snprintf(buf, sizeof(buf),
                    "<line x1=\"%.3f\" y1=\"%.3f\" x2=\"%.3f\" y2=\"%.3f\" "
                    "stroke=\"#999\" stroke-dasharray=\"4 3\"/>\n",
                    sx(pts[u].x), sy(pts[u].y), sx(pts[v].x), sy(pts[v].y));
      out += buf;
    }
  }
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (radii[i] <= 0.0) continue;
    std::snprintf(buf, sizeof(buf),
                  "<circle cx=\"%.3f\" cy=\"%.3f\" r=\"%.3f\" fill=\"#3b7dd8\" "
                  "fill-opacity=\"0.15\" stroke=\"#3b7dd8\"/>\n",
                  sx(pts[i].x), sy(pts[i].y), radii[i] * scale);
    out += buf;
  }
  for (std::size_t i = 0; i < pts.size(); ++i) {
    std::snprintf(buf, sizeof(buf),
                  "<circle cx=\"%.3f\" cy=\"%.3f\" r=\"3\" fill=\"black\"/>\n",
                  sx(pts[i].x), sy(pts[i].y));
    out += buf;
  }
  out += "</svg>\n";
  return out;
}

}  // namespace cra
