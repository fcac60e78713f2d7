#pragma once

// Polarity, Alexandrov bodies, reciprocals, flowers, cores, spherical
// inversion and the convex hull of star bodies.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "flowerkit/bodies.hpp"

namespace flowerkit {

struct OperatorReport {
  std::string op;
  std::string input;
  std::string output;
  std::size_t grid_size = 0;
  double defect = 0.0;
};

// Result of a convexity-type membership test together with the measured
// defect and the tolerance it was compared against.
struct ClassVerdict {
  bool holds = false;
  double defect = 0.0;
  double tol = 0.0;
  explicit operator bool() const { return holds; }
};

// ---------------------------------------------------------------------------

// Pointwise inversion of the radial function.
inline StarBody phi(const StarBody& A) {
  std::vector<double> r(A.size());
  for (std::size_t j = 0; j < A.size(); ++j) r[j] = ext_inv(A[j]);
  return StarBody(A.grid(), std::move(r));
}

// A[g]: intersection of the half-spaces <x, theta_j> <= g_j. Infinite
// entries impose nothing.
inline Body alexandrov(const StarBody& g) {
  std::vector<Constraint> rows;
  rows.reserve(g.size());
  for (std::size_t j = 0; j < g.size(); ++j)
    if (!std::isinf(g[j])) rows.push_back({g.grid().dir(j), g[j]});
  return Body::hrep(g.dim(), std::move(rows));
}

inline StarBody flower(const Body& K, const SphereGrid& grid) { return sample_support(K, grid); }

// Zong's core {x : B_x ⊆ A} coincides with A[r_A].
inline Body core(const StarBody& A) { return alexandrov(A); }

inline Body reciprocal(const Body& K, const SphereGrid& grid) { return alexandrov(phi(flower(K, grid))); }

// Polar of a star body: A° = A[1/r_A].
inline Body polar_star(const StarBody& A) { return alexandrov(phi(A)); }

namespace detail {

inline bool has_radial(const Body& K) {
  if (K.is<SampledSupport>() || K.is<Projected>()) return false;
  if (K.is<ScaledSum>()) return K.polygon2() != nullptr;
  return true;
}

// Vertices of {y : <v_i, y> <= 1} for a CCW polygon with the origin inside.
inline std::vector<Vec> dual_polygon_vertices(const Polygon2& P) {
  const auto& v = P.vertices;
  std::vector<Vec> out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Point2 a = v[i], b = v[(i + 1) % v.size()];
    const double det = cross(a, b);
    out.push_back({(b.y - a.y) / det, (a.x - b.x) / det});
  }
  return out;
}

}  // namespace detail

inline Body polar(const Body& K, const SphereGrid& grid) {
  if (K.is<Ball>()) {
    const Ball& b = K.as<Ball>();
    if (norm(b.center) == 0.0 && b.radius > 0.0) return Body::ball(b.center, 1.0 / b.radius);
  }
  if (K.is<PolarOf>()) return *K.as<PolarOf>().inner;
  if (K.dim() == 2 && K.is<Polytope>()) {
    const PolygonRadial rad(*K.polygon2());
    if (rad.origin_interior()) return Body::polytope(detail::dual_polygon_vertices(rad.polygon()));
  }
  if (detail::has_radial(K)) return Body::polar_of(K);
  require_grid_dim(K, grid, "polar");
  return Body::polar_of(alexandrov(sample_support(K, grid)));
}

// Radial function of conv A on the grid of A.
inline StarBody star_conv(const StarBody& A) {
  const std::size_t M = A.size();
  bool any = false;
  for (std::size_t j = 0; j < M; ++j) any = any || A[j] > 0.0;
  if (!any) return A;

  std::vector<double> out(M);
  if (A.dim() == 2) {
    // Infinite entries become far points; hull radii beyond half that
    // distance are read back as +inf.
    double maxfinite = 1.0;
    for (double r : A.radial())
      if (std::isfinite(r)) maxfinite = std::max(maxfinite, r);
    const double far = 1e9 * maxfinite;
    std::vector<Point2> pts{{0.0, 0.0}};
    pts.reserve(M + 1);
    for (std::size_t j = 0; j < M; ++j)
      if (A[j] > 0.0) pts.push_back((std::isinf(A[j]) ? far : A[j]) * A.grid().dir2(j));
    const PolygonRadial hull(hull2(std::move(pts)));
    for (std::size_t j = 0; j < M; ++j) {
      const double r = hull(A.grid().dir2(j));
      out[j] = r >= 0.5 * far ? kInf : std::max(r, A[j]);
    }
    return StarBody(A.grid(), std::move(out));
  }

  // r_{conv A}(u) = 1 / h_{A°}(u) with A° = {y : <p_j, y> <= 1}; a point at
  // infinity in direction theta_j contributes <theta_j, y> <= 0.
  LinearProgram lp;
  for (std::size_t j = 0; j < M; ++j) {
    if (A[j] <= 0.0) continue;
    if (std::isinf(A[j]))
      lp.constraints.push_back({A.grid().dir(j), 0.0});
    else
      lp.constraints.push_back({A.grid().dir(j), 1.0 / A[j]});
  }
  for (std::size_t j = 0; j < M; ++j) out[j] = std::max(A[j], ext_inv(lp_max(lp, A.grid().dir(j))));
  return StarBody(A.grid(), std::move(out));
}

// Inn_S K = Φ conv Φ K.
inline StarBody inner_hull(const Body& K, const SphereGrid& grid) {
  const StarBody r = sample_radial(K, grid);
  bool any = false;
  for (double v : r.radial()) any = any || v > 0.0;
  if (!any) throw DegenerateInput("inner_hull: radial function vanishes on the whole grid");
  return phi(star_conv(phi(r)));
}

// Sup-norm defect of A against its convex hull.
inline double convexity_defect(const StarBody& A) { return sup_defect(star_conv(A).radial(), A.radial()); }

inline ClassVerdict is_convex_star(const StarBody& A, double tol = 1e-6) {
  const double d = convexity_defect(A);
  return {d <= tol, d, tol};
}

// Φ(A) convex iff A is a flower.
inline ClassVerdict is_flower(const StarBody& A, double tol = 1e-6) { return is_convex_star(phi(A), tol); }

inline double default_class_tol(const Body& K) { return K.dim() == 2 ? 1e-6 : 1e-3; }

// delta = sup |h_{K''} - h_K| / (1 + sup h_K) over the grid.
inline ClassVerdict is_reciprocal(const Body& K, const SphereGrid& grid, double tol = -1.0) {
  if (tol < 0) tol = default_class_tol(K);
  const StarBody h = flower(K, grid);
  const Body K2 = reciprocal(reciprocal(K, grid), grid);
  const StarBody h2 = flower(K2, grid);
  double sup_h = 0.0, sup_d = 0.0;
  for (std::size_t j = 0; j < h.size(); ++j) {
    if (std::isinf(h[j])) throw UnboundedBody("is_reciprocal: body must be compact");
    sup_h = std::max(sup_h, h[j]);
    sup_d = std::max(sup_d, std::abs(h2[j] - h[j]));
  }
  const double delta = sup_d / (1.0 + sup_h);
  return {delta <= tol, delta, tol};
}

// ---------------------------------------------------------------------------
// Projections

inline Body project(const Body& K, const Subspace& E) { return Body::projected(K, E); }

// Projection of a star body onto E, sampled on `target` (a grid in E
// coordinates). Lines use the exact extent along +-e; planes bucket the
// projected boundary points by nearest grid direction.
inline StarBody project(const StarBody& A, const Subspace& E, const SphereGrid& target) {
  if (E.ambient_dim != A.dim()) throw std::invalid_argument("project: subspace ambient dimension mismatch");
  if (E.dim() != target.dim()) throw std::invalid_argument("project: target grid dimension mismatch");
  std::vector<double> r(target.size(), 0.0);
  if (E.dim() == 1) {
    for (std::size_t j = 0; j < A.size(); ++j) {
      if (A[j] == 0.0) continue;
      const double t = dot(E.basis[0], A.grid().dir(j));
      const double val = std::isinf(A[j]) ? (t == 0.0 ? 0.0 : kInf) : A[j] * std::abs(t);
      r[t > 0 ? 0 : 1] = std::max(r[t > 0 ? 0 : 1], val);
    }
    if (target.dir(0)[0] < 0) std::swap(r[0], r[1]);
    return StarBody(target, std::move(r));
  }
  if (E.dim() != 2) throw UnsupportedRepresentation("project: star bodies project onto lines or planes only");
  const std::size_t M = target.size();
  for (std::size_t j = 0; j < A.size(); ++j) {
    if (A[j] == 0.0) continue;
    const Vec c = E.coordinates(A.grid().dir(j));
    const double len = std::hypot(c[0], c[1]);
    if (len == 0.0) continue;
    double ang = std::atan2(c[1], c[0]);
    if (ang < 0) ang += 2 * std::numbers::pi;
    const auto k = static_cast<std::size_t>(std::lround(ang / (2 * std::numbers::pi) * static_cast<double>(M))) % M;
    r[k] = std::max(r[k], std::isinf(A[j]) ? kInf : A[j] * len);
  }
  return StarBody(target, std::move(r));
}

// ---------------------------------------------------------------------------
// Equality-case helper: the ball whose support best matches h_K in the
// least-squares sense on the grid, and the sup-norm misfit.

struct BallFit {
  Vec center;
  double radius = 0.0;
  double misfit = 0.0;
};

inline BallFit fit_ball(const Body& K, const SphereGrid& grid) {
  const StarBody h = flower(K, grid);
  const int n = grid.dim();
  BallFit fit{Vec(static_cast<std::size_t>(n), 0.0), 0.0, 0.0};
  std::vector<double> f(h.size());
  for (std::size_t j = 0; j < h.size(); ++j) {
    if (std::isinf(h[j])) throw UnboundedBody("fit_ball: body must be compact");
    f[j] = h[j];
  }
  fit.radius = grid.integrate(f);
  for (int k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < h.size(); ++j) f[j] = h[j] * grid.dir(j)[static_cast<std::size_t>(k)];
    fit.center[static_cast<std::size_t>(k)] = n * grid.integrate(f);
  }
  for (std::size_t j = 0; j < h.size(); ++j)
    fit.misfit = std::max(fit.misfit, std::abs(dot(fit.center, grid.dir(j)) + fit.radius - h[j]));
  return fit;
}

inline std::string describe(const Body& K) {
  std::ostringstream os;
  os << K.kind() << "(dim=" << K.dim() << ")";
  return os.str();
}

inline std::string describe(const StarBody& A) {
  std::ostringstream os;
  os << "star(dim=" << A.dim() << ", M=" << A.size() << ")";
  return os.str();
}

}  // namespace flowerkit
