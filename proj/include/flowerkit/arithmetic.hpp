#pragma once

// Minkowski addition, radial addition, the flower-sum of star bodies and the
// addition ⊕ defined through flowers, plus scaling.

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <vector>

#include "flowerkit/dualities.hpp"

namespace flowerkit {

inline Body scale(const Body& K, double lambda) {
  if (!(lambda >= 0.0)) throw std::invalid_argument("scale: factor must be >= 0");
  if (lambda == 0.0) return Body::origin(K.dim());
  if (lambda == 1.0) return K;
  if (K.is<Ball>()) {
    const Ball& b = K.as<Ball>();
    return Body::ball(lambda * b.center, lambda * b.radius);
  }
  if (K.is<Segment>()) return Body::segment(lambda * K.as<Segment>().x);
  if (K.is<Polytope>()) {
    std::vector<Vec> v = K.as<Polytope>().vertices;
    for (auto& x : v) x = lambda * x;
    return Body::polytope(std::move(v), K.dim());
  }
  if (K.is<Ellipse2>()) {
    const Ellipse2& e = K.as<Ellipse2>();
    return Body::ellipse(lambda * e.center, lambda * e.a, lambda * e.b, e.rotation);
  }
  if (K.is<HRep>()) {
    std::vector<Constraint> rows = K.as<HRep>().rows;
    for (auto& r : rows) r.bound *= lambda;
    return Body::hrep(K.dim(), std::move(rows));
  }
  if (K.is<PolarOf>()) return Body::polar_of(scale(*K.as<PolarOf>().inner, 1.0 / lambda));
  return Body::scaled_sum({{lambda, std::make_shared<const Body>(K)}});
}

// -K for polytopes (the only variant where central reflection keeps the
// representation).
inline Body negate_vertices(const Body& K) {
  if (!K.is<Polytope>()) throw UnsupportedRepresentation("negate_vertices: polytopes only");
  std::vector<Vec> v = K.as<Polytope>().vertices;
  for (auto& x : v) x = -1.0 * x;
  return Body::polytope(std::move(v), K.dim());
}

inline Body minkowski(const Body& K, const Body& T) {
  if (K.dim() != T.dim()) throw std::invalid_argument("minkowski: dimension mismatch");
  if (K.is<Ball>() && T.is<Ball>()) {
    const Ball &a = K.as<Ball>(), &b = T.as<Ball>();
    return Body::ball(a.center + b.center, a.radius + b.radius);
  }
  if (K.dim() == 2 && K.is<Polytope>() && T.is<Polytope>()) {
    const Polygon2 S = minkowski_sum(*K.polygon2(), *T.polygon2());
    std::vector<Vec> v;
    for (Point2 p : S.vertices) v.push_back(to_vec(p));
    return Body::polytope(std::move(v), 2);
  }
  return Body::scaled_sum({{1.0, std::make_shared<const Body>(K)}, {1.0, std::make_shared<const Body>(T)}});
}

inline StarBody radial_sum(const StarBody& A, const StarBody& B) {
  require_same_grid(A, B, "radial_sum");
  std::vector<double> r(A.size());
  for (std::size_t j = 0; j < A.size(); ++j) r[j] = A[j] + B[j];
  return StarBody(A.grid(), std::move(r));
}

namespace detail {

inline bool all_zero(const StarBody& A) {
  for (double r : A.radial())
    if (r != 0.0) return false;
  return true;
}

inline void require_bounded(const StarBody& A, const char* who) {
  if (!A.bounded()) throw UnboundedBody(std::string(who) + ": star body has infinite radial values");
}

inline Polygon2 boundary_hull(const StarBody& A) {
  std::vector<Point2> pts{{0.0, 0.0}};
  for (std::size_t j = 0; j < A.size(); ++j)
    if (A[j] > 0) pts.push_back(A[j] * A.grid().dir2(j));
  return hull2(std::move(pts));
}

// Points x with B_x ⊆ A: the vertices of the polygon A[r_A].
inline std::vector<Point2> core_vertices(const StarBody& A) {
  const Body C = core(A);
  if (const Polygon2* P = C.polygon2()) return P->vertices;
  throw DegenerateInput("flower_sum: core of the star body is unbounded");
}

// Support point of a CCW convex polygon at each grid direction, by a
// rotating pointer.
inline std::vector<Point2> support_points(const std::vector<Point2>& V, const SphereGrid& grid) {
  std::vector<Point2> out(grid.size());
  if (V.empty()) return out;
  const std::size_t n = V.size();
  std::size_t k = 0;
  const Point2 u0 = grid.dir2(0);
  for (std::size_t i = 1; i < n; ++i)
    if (dot(V[i], u0) > dot(V[k], u0)) k = i;
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const Point2 u = grid.dir2(j);
    for (std::size_t steps = 0; steps < n && dot(V[(k + 1) % n], u) > dot(V[k], u); ++steps) k = (k + 1) % n;
    out[j] = V[k];
  }
  return out;
}

struct Disc {
  Point2 c;
  double rho2;
};

inline double disc_radial(const Disc& d, Point2 u) {
  const double cu = dot(d.c, u);
  const double disc = d.rho2 - dot(d.c, d.c) + cu * cu;
  return std::max(0.0, cu + std::sqrt(std::max(0.0, disc)));
}

inline Disc pair_disc(Point2 x, Point2 y) {
  const double rho = 0.5 * (norm(x) + norm(y));
  return {0.5 * (x + y), rho * rho};
}

// Reduce a dense vertex list to the support points at `count` equispaced
// directions.
inline std::vector<Point2> coarse_extreme_points(const std::vector<Point2>& V, std::size_t count) {
  if (V.size() <= count) return V;
  const SphereGrid coarse = make_circle_grid(static_cast<int>(count));
  std::vector<Point2> pts = support_points(V, coarse);
  std::sort(pts.begin(), pts.end(), [](Point2 a, Point2 b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

}  // namespace detail

inline constexpr std::size_t kFlowerSumExtremePoints = 128;

// Minkowski sum of two planar flowers. Convex summands are added exactly as
// polygons through their boundary samples. Otherwise the sum is the union of
// the discs B_x + B_y = B((x+y)/2, (|x|+|y|)/2) over extreme points x, y of
// the cores; `ext_a` / `ext_b` supply those points when they are known.
inline StarBody flower_sum(const StarBody& A, const StarBody& B, const std::vector<Point2>* ext_a = nullptr,
                           const std::vector<Point2>* ext_b = nullptr) {
  require_same_grid(A, B, "flower_sum");
  if (A.dim() != 2) throw UnsupportedRepresentation("flower_sum: only planar star bodies are supported");
  detail::require_bounded(A, "flower_sum");
  detail::require_bounded(B, "flower_sum");
  if (detail::all_zero(A)) return B;
  if (detail::all_zero(B)) return A;

  const SphereGrid& grid = A.grid();
  const std::size_t M = grid.size();
  std::vector<double> r(M, 0.0);

  if (convexity_defect(A) <= 1e-9 && convexity_defect(B) <= 1e-9) {
    const PolygonRadial S(minkowski_sum(detail::boundary_hull(A), detail::boundary_hull(B)));
    for (std::size_t j = 0; j < M; ++j) r[j] = S(grid.dir2(j));
    return StarBody(grid, std::move(r));
  }

  const std::vector<Point2> VA = ext_a ? *ext_a : detail::core_vertices(A);
  const std::vector<Point2> VB = ext_b ? *ext_b : detail::core_vertices(B);
  std::vector<detail::Disc> discs;
  const auto XA = detail::coarse_extreme_points(VA, kFlowerSumExtremePoints);
  const auto XB = detail::coarse_extreme_points(VB, kFlowerSumExtremePoints);
  discs.reserve(XA.size() * XB.size());
  for (Point2 x : XA)
    for (Point2 y : XB) discs.push_back(detail::pair_disc(x, y));

  // Pairs of support points at each grid direction give r >= r_A + r_B.
  const bool dense = VA.size() > XA.size() || VB.size() > XB.size();
  std::vector<Point2> SA, SB;
  if (dense) {
    SA = detail::support_points(VA, grid);
    SB = detail::support_points(VB, grid);
  }
  for (std::size_t j = 0; j < M; ++j) {
    const Point2 u = grid.dir2(j);
    double best = 0.0;
    for (const auto& d : discs) best = std::max(best, detail::disc_radial(d, u));
    if (dense) best = std::max(best, detail::disc_radial(detail::pair_disc(SA[j], SB[j]), u));
    r[j] = std::max(best, A[j] + B[j]);
  }
  return StarBody(grid, std::move(r));
}

// Extreme points of a planar body when they are known exactly.
inline std::optional<std::vector<Point2>> exact_extreme_points(const Body& K) {
  if (K.dim() != 2) return std::nullopt;
  if (K.is<Segment>()) return std::vector<Point2>{{0.0, 0.0}, to_point2(K.as<Segment>().x)};
  if (K.is<Polytope>()) return K.polygon2()->vertices;
  return std::nullopt;
}

// K ⊕ T = core(K♣ + T♣).
inline Body oplus(const Body& K, const Body& T, const SphereGrid& grid) {
  if (K.dim() != T.dim()) throw std::invalid_argument("oplus: dimension mismatch");
  const auto xa = exact_extreme_points(K);
  const auto xb = exact_extreme_points(T);
  return core(flower_sum(flower(K, grid), flower(T, grid), xa ? &*xa : nullptr, xb ? &*xb : nullptr));
}

}  // namespace flowerkit
