#pragma once

// The default planar test fleet: centered and off-center balls, segments,
// seeded random polygons, the square, the cross-polytope and focal ellipses.

#include <cmath>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "flowerkit/bodies.hpp"

namespace flowerkit {

struct FleetMember {
  std::string name;
  Body body;
  std::string family;  // ball, offball, segment, polygon, square, cross, ellipse
};

// Star-shaped polygon around the origin: 3..12 vertices, angular gaps
// proportional to 1 + 0.8 U, radii uniform in [0.6, 1.4].
inline Body random_polygon(std::uint64_t seed) {
  std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + 17);
  std::uniform_int_distribution<int> count(3, 12);
  std::uniform_real_distribution<double> U(0.0, 1.0);
  const int m = count(rng);
  std::vector<double> gaps(static_cast<std::size_t>(m));
  double total = 0.0;
  for (auto& g : gaps) total += (g = 1.0 + 0.8 * U(rng));
  double ang = 2 * std::numbers::pi * U(rng);
  std::vector<Vec> verts;
  for (double g : gaps) {
    const double r = 0.6 + 0.8 * U(rng);
    verts.push_back({r * std::cos(ang), r * std::sin(ang)});
    ang += 2 * std::numbers::pi * g / total;
  }
  return Body::polytope(std::move(verts));
}

inline std::vector<FleetMember> default_fleet() {
  std::vector<FleetMember> f;
  for (double r : {0.5, 1.0, 2.0}) f.push_back({"ball_r" + std::to_string(r).substr(0, 3), Body::ball({0.0, 0.0}, r), "ball"});
  f.push_back({"offball_a", Body::ball({0.3, 0.0}, 1.0), "offball"});
  f.push_back({"offball_b", Body::ball({-0.2, 0.5}, 0.8), "offball"});
  f.push_back({"offball_c", Body::ball({0.0, -1.0}, 1.5), "offball"});
  f.push_back({"segment_e1", Body::segment({1.0, 0.0}), "segment"});
  f.push_back({"segment_diag", Body::segment({-0.6, 0.8}), "segment"});
  f.push_back({"segment_long", Body::segment({1.5, -2.0}), "segment"});
  for (int s = 0; s < 20; ++s)
    f.push_back({"polygon_" + std::to_string(s), random_polygon(static_cast<std::uint64_t>(s)), "polygon"});
  f.push_back({"square", Body::polytope({{1, 1}, {-1, 1}, {-1, -1}, {1, -1}}), "square"});
  f.push_back({"cross", Body::polytope({{1, 0}, {0, 1}, {-1, 0}, {0, -1}}), "cross"});
  f.push_back({"ellipse_e025", Body::ellipse_focal({1.0, 0.0}, 0.25), "ellipse"});
  f.push_back({"ellipse_e050", Body::ellipse_focal({1.0, 0.0}, 0.5), "ellipse"});
  f.push_back({"ellipse_e075", Body::ellipse_focal({0.6, -0.8}, 0.75), "ellipse"});
  return f;
}

}  // namespace flowerkit
