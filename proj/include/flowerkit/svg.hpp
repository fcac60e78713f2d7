#pragma once

// Planar SVG rendering of bodies and star bodies as closed boundary paths
// sampled at grid directions.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "flowerkit/dualities.hpp"

namespace flowerkit {

struct Shape {
  std::vector<Point2> boundary;
  bool dashed = false;
  std::string stroke = "#000000";
};

inline Shape shape_of(const StarBody& A, bool dashed, std::string stroke = "#000000") {
  if (A.dim() != 2) throw UnsupportedRepresentation("render: planar shapes only");
  Shape s{{}, dashed, std::move(stroke)};
  for (std::size_t j = 0; j < A.size(); ++j)
    if (std::isfinite(A[j])) s.boundary.push_back(A[j] * A.grid().dir2(j));
  return s;
}

inline Shape shape_of(const Body& K, const SphereGrid& grid, bool dashed, std::string stroke = "#000000") {
  if (K.dim() != 2) throw UnsupportedRepresentation("render: planar shapes only");
  return shape_of(sample_radial(K, grid), dashed, std::move(stroke));
}

// One panel: the shapes drawn in a common frame fitted with a 10% margin.
struct Panel {
  std::vector<Shape> shapes;
};

namespace detail {

inline std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.5f", v == 0.0 ? 0.0 : v);
  return buf;
}

struct Box {
  double x0 = -1, y0 = -1, x1 = 1, y1 = 1;
};

inline Box fit(const Panel& p) {
  Box b{0, 0, 0, 0};
  bool any = false;
  for (const auto& s : p.shapes)
    for (Point2 q : s.boundary) {
      b.x0 = std::min(b.x0, q.x), b.x1 = std::max(b.x1, q.x);
      b.y0 = std::min(b.y0, -q.y), b.y1 = std::max(b.y1, -q.y);
      any = true;
    }
  if (!any) return Box{};
  const double w = std::max(b.x1 - b.x0, 1e-9), h = std::max(b.y1 - b.y0, 1e-9);
  b.x0 -= 0.1 * w, b.x1 += 0.1 * w, b.y0 -= 0.1 * h, b.y1 += 0.1 * h;
  return b;
}

inline std::string panel_body(const Panel& p, const Box& b) {
  const double stroke = 0.005 * std::max(b.x1 - b.x0, b.y1 - b.y0);
  std::string out;
  for (const auto& s : p.shapes) {
    if (s.boundary.empty()) continue;
    std::string d;
    for (std::size_t k = 0; k < s.boundary.size(); ++k)
      d += (k ? " L " : "M ") + fmt(s.boundary[k].x) + " " + fmt(-s.boundary[k].y);
    d += " Z";
    out += "    <path d=\"" + d + "\" fill=\"none\" stroke=\"" + s.stroke + "\" stroke-width=\"" + fmt(stroke) + "\"";
    if (s.dashed) out += " stroke-dasharray=\"" + fmt(4 * stroke) + " " + fmt(3 * stroke) + "\"";
    out += "/>\n";
  }
  out += "    <circle cx=\"0\" cy=\"0\" r=\"" + fmt(1.5 * stroke) + "\" fill=\"#000000\"/>\n";
  return out;
}

}  // namespace detail

// SVG 1.1 document with the panels laid out left to right.
inline std::string render_svg(const std::vector<Panel>& panels, double panel_px = 300.0) {
  const std::size_t n = std::max<std::size_t>(panels.size(), 1);
  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + detail::fmt(panel_px * n) + "\" height=\"" +
         detail::fmt(panel_px) + "\" viewBox=\"0 0 " + detail::fmt(panel_px * n) + " " + detail::fmt(panel_px) + "\">\n";
  for (std::size_t k = 0; k < panels.size(); ++k) {
    const detail::Box b = detail::fit(panels[k]);
    out += "  <svg x=\"" + detail::fmt(panel_px * k) + "\" y=\"0\" width=\"" + detail::fmt(panel_px) + "\" height=\"" +
           detail::fmt(panel_px) + "\" viewBox=\"" + detail::fmt(b.x0) + " " + detail::fmt(b.y0) + " " +
           detail::fmt(b.x1 - b.x0) + " " + detail::fmt(b.y1 - b.y0) + "\">\n";
    out += detail::panel_body(panels[k], b);
    out += "  </svg>\n";
  }
  out += "</svg>\n";
  return out;
}

inline void write_svg(const std::vector<Panel>& panels, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::invalid_argument("render: cannot write '" + path + "'");
  f << render_svg(panels);
}

// Three planar archetypes: square, a triangle around the origin and a
// focal ellipse.
inline std::vector<Body> figure_archetypes() {
  return {Body::polytope({{1, 1}, {-1, 1}, {-1, -1}, {1, -1}}),
          Body::polytope({{1.2, -0.4}, {-0.5, 0.9}, {-0.6, -0.8}}),
          Body::ellipse_focal({1.0, 0.0}, 0.5)};
}

// figure 1: bodies (solid) with reciprocals (dashed);
// figure 2: bodies (solid) with flowers (dashed).
inline std::vector<Panel> figure_panels(int figure, const SphereGrid& grid) {
  if (figure != 1 && figure != 2) throw std::invalid_argument("render: figure must be 1 or 2");
  std::vector<Panel> panels;
  for (const Body& K : figure_archetypes()) {
    Panel p;
    p.shapes.push_back(shape_of(K, grid, false));
    if (figure == 1)
      p.shapes.push_back(shape_of(reciprocal(K, grid), grid, true, "#1f4e9c"));
    else
      p.shapes.push_back(shape_of(flower(K, grid), true, "#9c1f1f"));
    panels.push_back(std::move(p));
  }
  return panels;
}

}  // namespace flowerkit
