#pragma once

#include <algorithm>
#include <cstdio>
#include <string>
#include <vector>

#include "latsize/certificate.hpp"
#include "latsize/polytope.hpp"

namespace latsize {

namespace detail {

inline std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace detail

// Fixed-canvas plot of a 2D size computation: lattice dots, the input
// polygon, its transformed image, and the dashed dilate outline of the
// target body. Pure output artifact; deterministic for fixed inputs.
inline std::string render_svg(const Polytope& p, const SizeCertificate& cert) {
  if (p.dim() != 2) throw DimensionError("render_svg: 2D input required");
  Polytope image = transformed(p, cert.map);

  std::vector<Vec> outline;
  std::int64_t l = cert.value;
  if (cert.target == Target::kSimplex)
    outline = {Vec{0, 0}, Vec{l, 0}, Vec{0, l}};
  else if (cert.target == Target::kCube)
    outline = {Vec{0, 0}, Vec{l, 0}, Vec{l, l}, Vec{0, l}};

  std::int64_t min_x = 0, max_x = 1, min_y = 0, max_y = 1;
  auto stretch = [&](const Vec& v) {
    min_x = std::min(min_x, v[0]), max_x = std::max(max_x, v[0]);
    min_y = std::min(min_y, v[1]), max_y = std::max(max_y, v[1]);
  };
  for (const Vec& v : p.points()) stretch(v);
  for (const Vec& v : image.points()) stretch(v);
  for (const Vec& v : outline) stretch(v);
  min_x -= 1, min_y -= 1, max_x += 1, max_y += 1;

  const double canvas = 640.0, margin = 20.0;
  double span = static_cast<double>(std::max(max_x - min_x, max_y - min_y));
  double scale = (canvas - 2 * margin) / span;
  auto px = [&](std::int64_t x) { return margin + scale * static_cast<double>(x - min_x); };
  auto py = [&](std::int64_t y) { return canvas - margin - scale * static_cast<double>(y - min_y); };

  auto polygon = [&](const std::vector<Vec>& cycle, const std::string& style) {
    std::string s = "  <polygon points=\"";
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i) s += ' ';
      s += detail::fmt(px(cycle[i][0])) + ',' + detail::fmt(py(cycle[i][1]));
    }
    return s + "\" " + style + "/>\n";
  };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + detail::fmt(canvas) +
         "\" height=\"" + detail::fmt(canvas) + "\" viewBox=\"0 0 " + detail::fmt(canvas) + " " +
         detail::fmt(canvas) + "\">\n";
  svg += "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (std::int64_t x = min_x; x <= max_x; ++x)
    for (std::int64_t y = min_y; y <= max_y; ++y)
      svg += "  <circle cx=\"" + detail::fmt(px(x)) + "\" cy=\"" + detail::fmt(py(y)) +
             "\" r=\"1.5\" fill=\"#c8c8c8\"/>\n";
  if (!outline.empty())
    svg += polygon(outline,
                   "fill=\"none\" stroke=\"#2e8b57\" stroke-width=\"2\" "
                   "stroke-dasharray=\"6,4\"");
  svg += polygon(p.hull_2d().cycle, "fill=\"none\" stroke=\"#4682b4\" stroke-width=\"2\"");
  svg += polygon(image.hull_2d().cycle, "fill=\"none\" stroke=\"#dc143c\" stroke-width=\"2\"");
  svg += "</svg>\n";
  return svg;
}

}  // namespace latsize
