#pragma once

// Numeric substrate: vectors, sphere grids, planar hulls, a small dense LP
// solver and Haar sampling of linear subspaces.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <memory>
#include <numbers>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace flowerkit {

inline constexpr double kInf = std::numeric_limits<double>::infinity();
inline constexpr double GEOM_EPS = 1e-9;

// ---------------------------------------------------------------------------
// Extended reals on [0, +inf] with 1/0 = inf and 1/inf = 0.

inline double ext_inv(double x) {
  if (x == 0.0) return kInf;
  if (std::isinf(x)) return 0.0;
  return 1.0 / x;
}

// Pointwise defect used for identity checks. Both infinite counts as equal;
// large finite values are compared relatively.
inline double ext_defect(double a, double b) {
  constexpr double kHuge = 1e12;
  const bool ia = !(std::abs(a) < kHuge);
  const bool ib = !(std::abs(b) < kHuge);
  if (ia && ib) return 0.0;
  if (ia || ib) return kInf;
  return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

// Pairwise summation; fixed order keeps quadrature bit-reproducible.
inline double pairwise_sum(std::span<const double> xs) {
  if (xs.size() <= 8) {
    double s = 0.0;
    for (double x : xs) s += x;
    return s;
  }
  const std::size_t half = xs.size() / 2;
  return pairwise_sum(xs.first(half)) + pairwise_sum(xs.subspan(half));
}

// |B_2^n| = pi^{n/2} / Gamma(n/2 + 1)
inline double unit_ball_volume(int n) {
  if (n < 1) throw std::invalid_argument("unit_ball_volume: n must be >= 1");
  return std::pow(std::numbers::pi, n / 2.0) / std::tgamma(n / 2.0 + 1.0);
}

// ---------------------------------------------------------------------------
// Dense vectors

using Vec = std::vector<double>;

inline double dot(const Vec& a, const Vec& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline double norm(const Vec& a) { return std::sqrt(dot(a, a)); }

inline Vec operator+(Vec a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

inline Vec operator-(Vec a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

inline Vec operator*(double s, Vec a) {
  for (double& x : a) x *= s;
  return a;
}

inline Vec normalized(const Vec& a) {
  const double n = norm(a);
  if (!(n > 0.0)) throw std::invalid_argument("normalized: zero vector");
  return (1.0 / n) * a;
}

inline void require_unit(const Vec& u, const char* who) {
  if (std::abs(norm(u) - 1.0) > GEOM_EPS)
    throw std::invalid_argument(std::string(who) + ": direction is not a unit vector");
}

// ---------------------------------------------------------------------------
// Planar points

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Point2 operator*(double s, Point2 a) { return {s * a.x, s * a.y}; }
  friend bool operator==(Point2 a, Point2 b) { return a.x == b.x && a.y == b.y; }
};

inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point2 a) { return std::hypot(a.x, a.y); }
inline Point2 to_point2(const Vec& v) { return {v.at(0), v.at(1)}; }
inline Vec to_vec(Point2 p) { return {p.x, p.y}; }

// ---------------------------------------------------------------------------
// Sphere grids: directions plus weights of a quadrature for the uniform
// probability measure on S^{n-1}.

class SphereGrid {
 public:
  SphereGrid() = default;

  int dim() const { return data_ ? data_->dim : 0; }
  std::size_t size() const { return data_ ? data_->dirs.size() : 0; }
  const Vec& dir(std::size_t j) const { return data_->dirs[j]; }
  Point2 dir2(std::size_t j) const { return data_->dirs2[j]; }
  double weight(std::size_t j) const { return data_->weights[j]; }
  const std::vector<Vec>& dirs() const { return data_->dirs; }
  const std::vector<double>& weights() const { return data_->weights; }
  std::uint64_t seed() const { return data_ ? data_->seed : 0; }

  // Index of -dir(j) for symmetric planar grids (M divisible by 2), else -1.
  std::ptrdiff_t antipode(std::size_t j) const {
    if (dim() != 2 || size() % 2 != 0) return -1;
    return static_cast<std::ptrdiff_t>((j + size() / 2) % size());
  }

  // Weighted quadrature sum_j w_j f_j with pairwise accumulation.
  double integrate(std::span<const double> f) const {
    if (f.size() != size()) throw std::invalid_argument("integrate: sample count does not match grid");
    std::vector<double> terms(f.size());
    for (std::size_t j = 0; j < f.size(); ++j) terms[j] = data_->weights[j] * f[j];
    return pairwise_sum(terms);
  }

  // Same directions/weights (handles built independently compare equal).
  friend bool operator==(const SphereGrid& a, const SphereGrid& b) {
    if (a.data_ == b.data_) return true;
    if (!a.data_ || !b.data_) return false;
    return a.data_->dim == b.data_->dim && a.data_->dirs == b.data_->dirs &&
           a.data_->weights == b.data_->weights;
  }

  // The two-point "sphere" S^0 = {+1, -1} with weights 1/2, used for
  // one-dimensional subspaces.
  static SphereGrid line() {
    auto d = std::make_shared<Data>();
    d->dim = 1;
    d->dirs = {{1.0}, {-1.0}};
    d->weights = {0.5, 0.5};
    return SphereGrid(std::move(d));
  }

  static SphereGrid from_directions(int dim, std::vector<Vec> dirs, std::vector<double> weights,
                                    std::uint64_t seed = 0) {
    auto d = std::make_shared<Data>();
    d->dim = dim;
    d->dirs = std::move(dirs);
    d->weights = std::move(weights);
    d->seed = seed;
    if (dim == 2)
      for (const Vec& v : d->dirs) d->dirs2.push_back(to_point2(v));
    return SphereGrid(std::move(d));
  }

 private:
  struct Data {
    int dim = 0;
    std::uint64_t seed = 0;
    std::vector<Vec> dirs;
    std::vector<Point2> dirs2;
    std::vector<double> weights;
  };
  explicit SphereGrid(std::shared_ptr<const Data> d) : data_(std::move(d)) {}
  std::shared_ptr<const Data> data_;
};

namespace detail {

// Equispaced circle directions. When M is divisible by 4 the first quadrant
// is computed and the rest obtained by exact quarter turns, so axis
// directions are exact and the grid is exactly centrally symmetric.
inline std::vector<Vec> circle_dirs(int M) {
  std::vector<Vec> dirs(M);
  const double step = 2.0 * std::numbers::pi / M;
  if (M % 4 == 0) {
    const int q = M / 4;
    for (int j = 0; j < q; ++j) {
      double c = std::cos(step * j);
      double s = std::sin(step * j);
      if (j == 0) c = 1.0, s = 0.0;
      dirs[j] = {c, s};
      dirs[j + q] = {-s, c};
      dirs[j + 2 * q] = {-c, -s};
      dirs[j + 3 * q] = {s, -c};
    }
  } else {
    for (int j = 0; j < M; ++j) dirs[j] = {std::cos(step * j), std::sin(step * j)};
    dirs[0] = {1.0, 0.0};
  }
  return dirs;
}

inline std::vector<Vec> fibonacci_dirs(int M, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const double offset = std::uniform_real_distribution<double>(0.0, 2.0 * std::numbers::pi)(rng);
  const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
  std::vector<Vec> dirs(M);
  for (int j = 0; j < M; ++j) {
    const double z = 1.0 - (2.0 * j + 1.0) / M;
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double phi = offset + golden * j;
    dirs[j] = {r * std::cos(phi), r * std::sin(phi), z};
  }
  return dirs;
}

inline std::vector<Vec> gaussian_dirs(int n, int M, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<Vec> dirs(M);
  for (auto& d : dirs) {
    Vec v(n);
    double nn = 0.0;
    do {
      for (double& x : v) x = g(rng);
      nn = norm(v);
    } while (nn < 1e-12);
    d = (1.0 / nn) * v;
  }
  return dirs;
}

}  // namespace detail

// dim == 2: equispaced; dim == 3: spherical Fibonacci lattice with a seeded
// azimuthal offset; dim >= 4: seeded normalized Gaussian samples.
inline SphereGrid make_grid(int dim, int M, std::uint64_t seed = 0) {
  if (dim < 2) throw std::invalid_argument("make_grid: dim must be >= 2");
  if (M < 8) throw std::invalid_argument("make_grid: M must be >= 8");
  std::vector<Vec> dirs;
  if (dim == 2)
    dirs = detail::circle_dirs(M);
  else if (dim == 3)
    dirs = detail::fibonacci_dirs(M, seed);
  else
    dirs = detail::gaussian_dirs(dim, M, seed);
  std::vector<double> w(M, 1.0 / M);
  return SphereGrid::from_directions(dim, std::move(dirs), std::move(w), seed);
}

// Small planar grids (M = 4 etc.) bypass the M >= 8 floor; used by tests
// and by the figure renderer.
inline SphereGrid make_circle_grid(int M) {
  if (M < 1) throw std::invalid_argument("make_circle_grid: M must be positive");
  std::vector<double> w(M, 1.0 / M);
  return SphereGrid::from_directions(2, detail::circle_dirs(M), std::move(w));
}

// ---------------------------------------------------------------------------
// Convex polygons

// Counter-clockwise vertex list. Degenerate polygons have one (a point) or
// two (a segment) vertices.
struct Polygon2 {
  std::vector<Point2> vertices;

  std::size_t size() const { return vertices.size(); }
  bool empty() const { return vertices.empty(); }
};

inline double orient(Point2 o, Point2 a, Point2 b) { return cross(a - o, b - o); }

// Andrew's monotone chain; collinear points are dropped.
inline Polygon2 hull2(std::vector<Point2> pts) {
  if (pts.empty()) throw std::invalid_argument("hull2: empty input");
  std::sort(pts.begin(), pts.end(), [](Point2 a, Point2 b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return Polygon2{pts};
  std::vector<Point2> h(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && orient(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && orient(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return Polygon2{std::move(h)};
}

inline Polygon2 hull2(const std::vector<Vec>& pts) {
  std::vector<Point2> p;
  p.reserve(pts.size());
  for (const Vec& v : pts) {
    if (v.size() != 2) throw std::invalid_argument("hull2: points must be two-dimensional");
    p.push_back(to_point2(v));
  }
  return hull2(std::move(p));
}

inline double polygon_area(const Polygon2& P) {
  const auto& v = P.vertices;
  if (v.size() < 3) return 0.0;
  std::vector<double> terms(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) terms[i] = cross(v[i], v[(i + 1) % v.size()]);
  return 0.5 * pairwise_sum(terms);
}

inline double polygon_perimeter(const Polygon2& P) {
  const auto& v = P.vertices;
  if (v.size() < 2) return 0.0;
  if (v.size() == 2) return 2.0 * norm(v[1] - v[0]);
  double s = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) s += norm(v[(i + 1) % v.size()] - v[i]);
  return s;
}

inline double polygon_support(const Polygon2& P, Point2 u) {
  double h = -kInf;
  for (Point2 v : P.vertices) h = std::max(h, dot(v, u));
  return h;
}

// Exact Minkowski sum by merging edge sequences; degenerate operands fall
// back to the hull of pairwise vertex sums.
inline Polygon2 minkowski_sum(const Polygon2& A, const Polygon2& B) {
  if (A.empty() || B.empty()) throw std::invalid_argument("minkowski_sum: empty polygon");
  if (A.size() < 3 || B.size() < 3) {
    std::vector<Point2> pts;
    for (Point2 a : A.vertices)
      for (Point2 b : B.vertices) pts.push_back(a + b);
    return hull2(std::move(pts));
  }
  auto lowest = [](const std::vector<Point2>& v) {
    std::size_t k = 0;
    for (std::size_t i = 1; i < v.size(); ++i)
      if (v[i].y < v[k].y || (v[i].y == v[k].y && v[i].x < v[k].x)) k = i;
    return k;
  };
  const auto& a = A.vertices;
  const auto& b = B.vertices;
  const std::size_t ia = lowest(a), ib = lowest(b);
  const std::size_t na = a.size(), nb = b.size();
  std::vector<Point2> out;
  out.reserve(na + nb);
  std::size_t i = 0, j = 0;
  while (i < na || j < nb) {
    out.push_back(a[(ia + i) % na] + b[(ib + j) % nb]);
    const Point2 ea = a[(ia + i + 1) % na] - a[(ia + i) % na];
    const Point2 eb = b[(ib + j + 1) % nb] - b[(ib + j) % nb];
    const double c = cross(ea, eb);
    if (j >= nb || (i < na && c > 0)) {
      ++i;
    } else if (i >= na || c < 0) {
      ++j;
    } else {
      ++i;
      ++j;
    }
  }
  return hull2(std::move(out));
}

// Radial function of a convex polygon containing the origin (interior or
// boundary): sup{lambda >= 0 : lambda u in P}. When the origin is strictly
// interior the sector is found by binary search over vertex angles.
class PolygonRadial {
 public:
  PolygonRadial() = default;
  explicit PolygonRadial(Polygon2 P) : poly_(std::move(P)) {
    const auto& v = poly_.vertices;
    interior_ = v.size() >= 3;
    for (std::size_t i = 0; i < v.size() && interior_; ++i)
      if (!(cross(v[i], v[(i + 1) % v.size()]) > 0.0)) interior_ = false;
    if (interior_) {
      std::size_t start = 0;
      double best = kInf;
      for (std::size_t i = 0; i < v.size(); ++i) {
        const double a = std::atan2(v[i].y, v[i].x);
        if (a < best) best = a, start = i;
      }
      std::rotate(poly_.vertices.begin(), poly_.vertices.begin() + static_cast<std::ptrdiff_t>(start),
                  poly_.vertices.end());
      angles_.reserve(v.size());
      for (Point2 p : poly_.vertices) angles_.push_back(std::atan2(p.y, p.x));
    }
  }

  const Polygon2& polygon() const { return poly_; }
  bool origin_interior() const { return interior_; }

  double operator()(Point2 u) const {
    const auto& v = poly_.vertices;
    if (v.empty()) return 0.0;
    if (interior_) {
      const double a = std::atan2(u.y, u.x);
      auto it = std::upper_bound(angles_.begin(), angles_.end(), a);
      const std::size_t n = v.size();
      const std::size_t hi = (it == angles_.end()) ? 0 : static_cast<std::size_t>(it - angles_.begin());
      const std::size_t lo = (hi + n - 1) % n;
      return edge_hit(v[lo], v[hi], u);
    }
    return scan(u);
  }

 private:
  static double edge_hit(Point2 a, Point2 b, Point2 u) {
    const Point2 d = b - a;
    const double den = cross(u, d);
    if (den == 0.0) return std::max({0.0, dot(a, u), dot(b, u)});
    return std::max(0.0, cross(a, d) / den);
  }

  double scan(Point2 u) const {
    const auto& v = poly_.vertices;
    const double scale = std::max(1.0, norm(v[0]));
    double best = 0.0;
    if (v.size() == 1) {
      const double c = cross(v[0], u);
      if (std::abs(c) <= 1e-12 * scale && dot(v[0], u) > 0) best = dot(v[0], u);
      return best;
    }
    for (std::size_t i = 0; i < v.size(); ++i) {
      const Point2 a = v[i], b = v[(i + 1) % v.size()];
      const Point2 d = b - a;
      const double den = cross(u, d);
      const double len = std::max(norm(d), 1e-300);
      if (std::abs(den) <= 1e-14 * len) {
        // Edge parallel to the ray: counts only if it lies on the ray's line.
        if (std::abs(cross(a, u)) <= 1e-12 * std::max(1.0, norm(a)))
          best = std::max({best, dot(a, u), dot(b, u)});
        continue;
      }
      const double t = cross(a, u) / den;
      if (t < -1e-12 || t > 1.0 + 1e-12) continue;
      best = std::max(best, cross(a, d) / den);
    }
    return best;
  }

  Polygon2 poly_;
  bool interior_ = false;
  std::vector<double> angles_;
};

// ---------------------------------------------------------------------------
// Linear programs  max <c, x>  s.t.  <a_i, x> <= b_i,  b_i >= 0.

struct Constraint {
  Vec normal;
  double bound = 0.0;
};

struct LinearProgram {
  std::vector<Constraint> constraints;
};

// Solves the dual  min b.y  s.t.  A^T y = c, y >= 0  with a two-phase dense
// simplex (Bland's rule). The tableau has n rows, so thousands of
// constraints in low dimension stay cheap. An infeasible dual means the
// primal is unbounded in that direction.
inline double lp_max(const LinearProgram& lp, const Vec& direction) {
  const std::size_t n = direction.size();
  const std::size_t m = lp.constraints.size();
  for (const auto& c : lp.constraints) {
    if (c.normal.size() != n) throw std::invalid_argument("lp_max: dimension mismatch");
    if (!(c.bound >= 0.0)) throw std::invalid_argument("lp_max: bounds must be >= 0 (origin feasible)");
  }
  bool zero = true;
  for (double x : direction) zero = zero && x == 0.0;
  if (zero) return 0.0;
  if (m == 0) return kInf;

  // Columns: m dual variables, then n artificials. Rows: n equalities.
  const std::size_t cols = m + n;
  std::vector<std::vector<double>> T(n, std::vector<double>(cols + 1, 0.0));
  std::vector<std::size_t> basis(n);
  for (std::size_t r = 0; r < n; ++r) {
    const double sgn = direction[r] < 0 ? -1.0 : 1.0;
    for (std::size_t j = 0; j < m; ++j) T[r][j] = sgn * lp.constraints[j].normal[r];
    T[r][m + r] = 1.0;
    T[r][cols] = sgn * direction[r];
    basis[r] = m + r;
  }
  constexpr double eps = 1e-12;

  auto pivot = [&](std::size_t pr, std::size_t pc) {
    const double p = T[pr][pc];
    for (double& x : T[pr]) x /= p;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == pr) continue;
      const double f = T[r][pc];
      if (f == 0.0) continue;
      for (std::size_t c = 0; c <= cols; ++c) T[r][c] -= f * T[pr][c];
    }
    basis[pr] = pc;
  };

  // Minimizes cost.x over allowed columns; returns false if unbounded.
  auto run = [&](const std::vector<double>& cost, std::size_t allowed) {
    for (int iter = 0; iter < 100000; ++iter) {
      std::size_t enter = allowed;
      for (std::size_t c = 0; c < allowed; ++c) {
        double rc = cost[c];
        for (std::size_t r = 0; r < n; ++r) rc -= cost[basis[r]] * T[r][c];
        if (rc < -eps) {
          enter = c;
          break;
        }
      }
      if (enter == allowed) return true;
      std::size_t leave = n;
      double best = kInf;
      for (std::size_t r = 0; r < n; ++r) {
        if (T[r][enter] > eps) {
          const double ratio = T[r][cols] / T[r][enter];
          if (ratio < best - eps || (ratio <= best + eps && basis[r] < basis[leave])) {
            best = ratio;
            leave = r;
          }
        }
      }
      if (leave == n) return false;
      pivot(leave, enter);
    }
    throw std::runtime_error("lp_max: iteration limit");
  };

  std::vector<double> phase1(cols, 0.0);
  for (std::size_t r = 0; r < n; ++r) phase1[m + r] = 1.0;
  run(phase1, cols);
  double infeas = 0.0;
  for (std::size_t r = 0; r < n; ++r)
    if (basis[r] >= m) infeas += T[r][cols];
  const double scale = std::max(1.0, norm(direction));
  if (infeas > 1e-9 * scale) return kInf;
  // Drive remaining zero-level artificials out of the basis where possible.
  for (std::size_t r = 0; r < n; ++r) {
    if (basis[r] < m) continue;
    for (std::size_t c = 0; c < m; ++c)
      if (std::abs(T[r][c]) > 1e-9) {
        pivot(r, c);
        break;
      }
  }
  std::vector<double> cost(cols, 0.0);
  for (std::size_t j = 0; j < m; ++j) cost[j] = lp.constraints[j].bound;
  if (!run(cost, m)) return -kInf;  // dual unbounded below: primal infeasible (excluded by precondition)
  double value = 0.0;
  for (std::size_t r = 0; r < n; ++r)
    if (basis[r] < m) value += cost[basis[r]] * T[r][cols];
  return value;
}

// ---------------------------------------------------------------------------
// Linear subspaces

struct Subspace {
  int ambient_dim = 0;
  std::vector<Vec> basis;  // orthonormal

  int dim() const { return static_cast<int>(basis.size()); }

  // Embeds coordinates relative to the basis into the ambient space.
  Vec embed(const Vec& coords) const {
    Vec x(ambient_dim, 0.0);
    for (std::size_t k = 0; k < basis.size(); ++k)
      for (int i = 0; i < ambient_dim; ++i) x[i] += coords[k] * basis[k][i];
    return x;
  }

  Vec coordinates(const Vec& x) const {
    Vec c(basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k) c[k] = dot(basis[k], x);
    return c;
  }
};

// Modified Gram-Schmidt; throws if the vectors are dependent.
inline Subspace orthonormal_subspace(int ambient_dim, std::vector<Vec> vs) {
  Subspace E{ambient_dim, {}};
  for (Vec v : vs) {
    if (static_cast<int>(v.size()) != ambient_dim) throw std::invalid_argument("subspace: dimension mismatch");
    for (const Vec& b : E.basis) v = v - dot(v, b) * b;
    for (const Vec& b : E.basis) v = v - dot(v, b) * b;
    const double nv = norm(v);
    if (nv < 1e-12) throw std::invalid_argument("subspace: linearly dependent spanning vectors");
    E.basis.push_back((1.0 / nv) * v);
  }
  return E;
}

// Haar-distributed i-frames: orthonormalized Gaussian matrices.
inline std::vector<Subspace> sample_grassmannian(int n, int i, int count, std::uint64_t seed) {
  if (n < 1 || i < 1 || i > n) throw std::invalid_argument("sample_grassmannian: need 1 <= i <= n");
  if (count < 0) throw std::invalid_argument("sample_grassmannian: negative count");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<Subspace> out;
  out.reserve(count);
  while (static_cast<int>(out.size()) < count) {
    std::vector<Vec> cols(i, Vec(n));
    for (auto& c : cols)
      for (double& x : c) x = g(rng);
    try {
      out.push_back(orthonormal_subspace(n, std::move(cols)));
    } catch (const std::invalid_argument&) {
      // measure-zero event; draw again
    }
  }
  return out;
}

}  // namespace flowerkit
