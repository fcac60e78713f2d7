#pragma once

// Volumes of star bodies, flower (♣) mixed volumes and quermassintegrals,
// the classical planar counterparts, a Kubota-type Monte-Carlo estimator,
// the geometric distance and inequality verdicts.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "flowerkit/arithmetic.hpp"

namespace flowerkit {

namespace detail {

inline std::vector<double> finite_support(const Body& K, const SphereGrid& grid, const char* who) {
  std::vector<double> h = support_samples(K, grid);
  for (double v : h)
    if (std::isinf(v)) throw UnboundedBody(std::string(who) + ": body has infinite support values");
  return h;
}

inline double ipow(double x, int n) {
  double r = 1.0;
  for (int i = 0; i < n; ++i) r *= x;
  return r;
}

}  // namespace detail

inline double star_volume(const StarBody& A) {
  detail::require_bounded(A, "star_volume");
  const int n = A.dim();
  std::vector<double> f(A.size());
  for (std::size_t j = 0; j < A.size(); ++j) f[j] = detail::ipow(A[j], n);
  return unit_ball_volume(n) * A.grid().integrate(f);
}

inline double flower_volume(const Body& K, const SphereGrid& grid) {
  require_grid_dim(K, grid, "flower_volume");
  const int n = grid.dim();
  std::vector<double> h = detail::finite_support(K, grid, "flower_volume");
  for (double& v : h) v = detail::ipow(v, n);
  return unit_ball_volume(n) * grid.integrate(h);
}

// V♣(K_1, ..., K_n) = |B| * ∫ h_{K_1} ... h_{K_n} dσ.
inline double flower_mixed_volume(const std::vector<Body>& bodies, const SphereGrid& grid) {
  const int n = grid.dim();
  if (static_cast<int>(bodies.size()) != n)
    throw std::invalid_argument("flower_mixed_volume: need exactly one body per dimension");
  std::vector<double> prod(grid.size(), 1.0);
  for (const Body& K : bodies) {
    require_grid_dim(K, grid, "flower_mixed_volume");
    const std::vector<double> h = detail::finite_support(K, grid, "flower_mixed_volume");
    for (std::size_t j = 0; j < h.size(); ++j) prod[j] *= h[j];
  }
  return unit_ball_volume(n) * grid.integrate(prod);
}

// W♣_i(K) = V♣(K, ..., K, B, ..., B) with i copies of the ball.
inline double quermass_flower(const Body& K, int i, const SphereGrid& grid) {
  const int n = grid.dim();
  if (i < 0 || i > n) throw std::invalid_argument("quermass_flower: index out of range");
  require_grid_dim(K, grid, "quermass_flower");
  if (i == n) return unit_ball_volume(n);
  std::vector<double> h = detail::finite_support(K, grid, "quermass_flower");
  for (double& v : h) v = detail::ipow(v, n - i);
  return unit_ball_volume(n) * grid.integrate(h);
}

// ---------------------------------------------------------------------------
// Classical planar functionals

inline Polygon2 as_polygon(const Body& K) {
  if (K.dim() != 2) throw UnsupportedRepresentation("as_polygon: planar bodies only");
  if (K.is<Segment>()) return hull2(std::vector<Point2>{{0.0, 0.0}, to_point2(K.as<Segment>().x)});
  if (const Polygon2* P = K.polygon2()) return *P;
  throw UnsupportedRepresentation("as_polygon: body is not a polygon");
}

// Exact area of planar bodies with closed forms.
inline double area(const Body& K) {
  if (K.dim() != 2) throw UnsupportedRepresentation("area: planar bodies only");
  if (K.is<Ball>()) return std::numbers::pi * K.as<Ball>().radius * K.as<Ball>().radius;
  if (K.is<Ellipse2>()) return std::numbers::pi * K.as<Ellipse2>().a * K.as<Ellipse2>().b;
  if (K.is<Segment>()) return 0.0;
  if (const Polygon2* P = K.polygon2()) return polygon_area(*P);
  throw UnsupportedRepresentation("area: no closed form for " + K.kind());
}

// V(K, T) = (|K + T| - |K| - |T|) / 2 on exact polygons.
inline double classical_mixed_area_2d(const Body& K, const Body& T) {
  const Polygon2 P = as_polygon(K), Q = as_polygon(T);
  return 0.5 * (polygon_area(minkowski_sum(P, Q)) - polygon_area(P) - polygon_area(Q));
}

// Planar quermassintegrals: W_0 = |K|, W_1 = π * mean h (Cauchy, on the same
// grid as the flower functionals), W_2 = π.
inline double quermass_classical_2d(const Body& K, int i, const SphereGrid& grid) {
  if (grid.dim() != 2 || K.dim() != 2) throw UnsupportedRepresentation("quermass_classical_2d: planar only");
  if (i < 0 || i > 2) throw std::invalid_argument("quermass_classical_2d: index out of range");
  if (i == 0) return area(K);
  if (i == 2) return unit_ball_volume(2);
  return unit_ball_volume(2) * grid.integrate(detail::finite_support(K, grid, "quermass_classical_2d"));
}

// ---------------------------------------------------------------------------

struct McEstimate {
  double estimate = 0.0;
  double std_error = 0.0;
  int samples = 0;
};

// W♣_{n-i}(K) = |B^n| / |B^i| * E_E |(Proj_E K)♣| over Haar-random E.
inline McEstimate quermass_kubota_mc(const Body& K, int i, int samples, std::uint64_t seed, int sub_grid = 256) {
  const int n = K.dim();
  if (i < 1 || i > n - 1) throw std::invalid_argument("quermass_kubota_mc: need 1 <= i <= n-1");
  if (samples < 2) throw std::invalid_argument("quermass_kubota_mc: need at least two samples");
  const SphereGrid gE = i == 1 ? SphereGrid::line() : (i == 2 ? make_circle_grid(sub_grid) : make_grid(i, sub_grid, seed));
  const double factor = unit_ball_volume(n) / unit_ball_volume(i);
  std::vector<double> vals;
  vals.reserve(static_cast<std::size_t>(samples));
  for (const Subspace& E : sample_grassmannian(n, i, samples, seed))
    vals.push_back(factor * flower_volume(project(K, E), gE));
  const double mean = pairwise_sum(vals) / samples;
  std::vector<double> sq(vals.size());
  for (std::size_t k = 0; k < vals.size(); ++k) sq[k] = (vals[k] - mean) * (vals[k] - mean);
  const double var = pairwise_sum(sq) / (samples - 1);
  return {mean, std::sqrt(var / samples), samples};
}

// d(A, B) = max(r_B / r_A) / min(r_B / r_A) on the common grid.
inline double geometric_distance(const StarBody& A, const StarBody& B) {
  require_same_grid(A, B, "geometric_distance");
  double hi = 0.0, lo = kInf;
  for (std::size_t j = 0; j < A.size(); ++j) {
    if (!(A[j] > 0.0 && B[j] > 0.0) || std::isinf(A[j]) || std::isinf(B[j]))
      throw DegenerateInput("geometric_distance: radial values must lie in (0, inf)");
    const double q = B[j] / A[j];
    hi = std::max(hi, q);
    lo = std::min(lo, q);
  }
  return hi / lo;
}

// ---------------------------------------------------------------------------
// Inequality verdicts: each states lhs <= rhs.

struct InequalityVerdict {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  bool holds = false;
  double tolerance = 0.0;
};

inline constexpr double kVerdictRelTol = 1e-12;

inline InequalityVerdict make_verdict(std::string name, double lhs, double rhs, double rel_tol = kVerdictRelTol) {
  InequalityVerdict v;
  v.name = std::move(name);
  v.lhs = lhs;
  v.rhs = rhs;
  v.slack = rhs - lhs;
  v.tolerance = rel_tol * std::max({1.0, std::abs(lhs), std::abs(rhs)});
  v.holds = v.slack >= -v.tolerance;
  return v;
}

// |(K+T)♣|^{1/n} <= |K♣|^{1/n} + |T♣|^{1/n}
inline InequalityVerdict reverse_brunn_minkowski(const Body& K, const Body& T, const SphereGrid& grid) {
  const double n = grid.dim();
  const double lhs = std::pow(flower_volume(minkowski(K, T), grid), 1.0 / n);
  const double rhs = std::pow(flower_volume(K, grid), 1.0 / n) + std::pow(flower_volume(T, grid), 1.0 / n);
  return make_verdict("reverse_brunn_minkowski", lhs, rhs);
}

// V♣(K1,K2,K3..)^2 <= V♣(K1,K1,K3..) V♣(K2,K2,K3..)
inline InequalityVerdict flower_af_quadratic(const std::vector<Body>& bodies, const SphereGrid& grid) {
  if (bodies.size() < 2) throw std::invalid_argument("flower_af_quadratic: need at least two bodies");
  std::vector<Body> a = bodies, b = bodies;
  a[1] = bodies[0];
  b[0] = bodies[1];
  const double v = flower_mixed_volume(bodies, grid);
  return make_verdict("flower_af_quadratic", v * v, flower_mixed_volume(a, grid) * flower_mixed_volume(b, grid));
}

// V♣(K1,...,Kn) <= (prod |Ki♣|)^{1/n}
inline InequalityVerdict flower_af_product(const std::vector<Body>& bodies, const SphereGrid& grid) {
  const double n = grid.dim();
  double logp = 0.0;
  for (const Body& K : bodies) logp += std::log(flower_volume(K, grid));
  return make_verdict("flower_af_product", flower_mixed_volume(bodies, grid), std::exp(logp / n));
}

// Links of the chain of normalized quermassintegrals. The flower half holds
// in every dimension; the classical half and the mean-width link are planar.
inline std::vector<InequalityVerdict> quermass_chain(const Body& K, const SphereGrid& grid) {
  const int n = grid.dim();
  const double vb = unit_ball_volume(n);
  std::vector<InequalityVerdict> out;
  // (W♣_{n-k}/|B|)^{1/k} <= (W♣_{n-k-1}/|B|)^{1/(k+1)}
  for (int k = 1; k < n; ++k) {
    const double lhs = std::pow(quermass_flower(K, n - k, grid) / vb, 1.0 / k);
    const double rhs = std::pow(quermass_flower(K, n - k - 1, grid) / vb, 1.0 / (k + 1));
    out.push_back(make_verdict("chain_flower_W" + std::to_string(n - k) + "_W" + std::to_string(n - k - 1), lhs, rhs));
  }
  if (n == 2) {
    const double w0 = quermass_classical_2d(K, 0, grid), w1 = quermass_classical_2d(K, 1, grid);
    out.push_back(make_verdict("chain_isoperimetric", std::sqrt(w0 / vb), w1 / vb));
    const double f1 = quermass_flower(K, 1, grid);
    out.push_back(make_verdict("chain_mean_width_le", w1 / vb, f1 / vb));
    out.push_back(make_verdict("chain_mean_width_ge", f1 / vb, w1 / vb));
  }
  return out;
}

// W♣_i(K) >= W_i(K), i = 0, 1, 2 (planar).
inline std::vector<InequalityVerdict> flower_dominates_classical(const Body& K, const SphereGrid& grid) {
  std::vector<InequalityVerdict> out;
  for (int i = 0; i <= 2; ++i)
    out.push_back(make_verdict("flower_ge_classical_W" + std::to_string(i), quermass_classical_2d(K, i, grid),
                               quermass_flower(K, i, grid)));
  return out;
}

inline const std::vector<std::string>& inequality_names() {
  static const std::vector<std::string> names{"reverse_brunn_minkowski", "flower_af_quadratic", "flower_af_product",
                                              "quermass_chain", "flower_ge_classical"};
  return names;
}

// Dispatch by suite name. Pairwise inequalities take two bodies (padded with
// the first for n > 2), single-body suites take one.
inline std::vector<InequalityVerdict> verify_inequality(const std::string& name, const std::vector<Body>& inputs,
                                                        const SphereGrid& grid) {
  if (inputs.empty()) throw std::invalid_argument("verify_inequality: no input bodies");
  auto padded = [&] {
    std::vector<Body> b = inputs;
    b.resize(static_cast<std::size_t>(grid.dim()), inputs.front());
    return b;
  };
  if (name == "reverse_brunn_minkowski")
    return {reverse_brunn_minkowski(inputs.front(), inputs.size() > 1 ? inputs[1] : inputs.front(), grid)};
  if (name == "flower_af_quadratic") return {flower_af_quadratic(padded(), grid)};
  if (name == "flower_af_product") return {flower_af_product(padded(), grid)};
  if (name == "quermass_chain") return quermass_chain(inputs.front(), grid);
  if (name == "flower_ge_classical") return flower_dominates_classical(inputs.front(), grid);
  throw std::invalid_argument("verify_inequality: unknown inequality '" + name + "'");
}

}  // namespace flowerkit
