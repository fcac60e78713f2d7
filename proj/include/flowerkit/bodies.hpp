#pragma once

// Convex bodies containing the origin and star bodies sampled on a sphere
// grid. Every body carries its support function; most also expose a radial
// function.

#include <algorithm>
#include <cmath>
#include <memory>
#include <numbers>
#include <stdexcept>
#include <string>
#include <typeinfo>
#include <variant>
#include <vector>

#include "flowerkit/errors.hpp"
#include "flowerkit/numkit.hpp"

namespace flowerkit {

class Body;

struct Ball {
  Vec center;
  double radius = 0.0;
};

// The segment [0, x].
struct Segment {
  Vec x;
};

// conv(vertices U {0}); the origin is always adjoined.
struct Polytope {
  std::vector<Vec> vertices;
};

// Planar ellipse given by center, semi-axes a >= b > 0 and the rotation of
// the major axis.
struct Ellipse2 {
  Point2 center;
  double a = 1.0;
  double b = 1.0;
  double rotation = 0.0;
};

// Intersection of half-spaces <normal, x> <= bound with unit normals and
// nonnegative bounds. No rows means the whole space.
struct HRep {
  int dim = 0;
  std::vector<Constraint> rows;
};

// Support values on a grid. Planar data is interpolated linearly in angle,
// higher dimensions use the nearest grid direction.
struct SampledSupport {
  SphereGrid grid;
  std::vector<double> values;
};

struct ScaledTerm {
  double coeff = 1.0;
  std::shared_ptr<const Body> body;
};

// Lazy Minkowski combination sum_i c_i K_i; only the support is evaluated.
struct ScaledSum {
  std::vector<ScaledTerm> terms;
};

// Polar body of `inner`, evaluated through h_{K°} = 1/r_K and r_{K°} = 1/h_K.
struct PolarOf {
  std::shared_ptr<const Body> inner;
};

// Orthogonal projection of `inner` onto a subspace; lives in subspace
// coordinates.
struct Projected {
  std::shared_ptr<const Body> inner;
  Subspace subspace;
};

class Body {
 public:
  using Rep = std::variant<Ball, Segment, Polytope, Ellipse2, HRep, SampledSupport, ScaledSum, PolarOf, Projected>;

  static Body ball(Vec center, double radius) {
    if (center.empty()) throw std::invalid_argument("ball: empty center");
    if (!(radius >= 0.0)) throw std::invalid_argument("ball: radius must be >= 0");
    if (norm(center) > radius + 1e-12) throw std::invalid_argument("ball: origin must lie in the ball");
    return Body(Ball{std::move(center), radius});
  }

  static Body segment(Vec x) {
    if (x.empty()) throw std::invalid_argument("segment: empty endpoint");
    return Body(Segment{std::move(x)});
  }

  static Body polytope(std::vector<Vec> vertices, int dim = 0) {
    if (vertices.empty() && dim < 1) throw std::invalid_argument("polytope: need vertices or a dimension");
    const std::size_t n = vertices.empty() ? static_cast<std::size_t>(dim) : vertices.front().size();
    for (const Vec& v : vertices)
      if (v.size() != n || n == 0) throw std::invalid_argument("polytope: inconsistent vertex dimensions");
    Body b(Polytope{std::move(vertices)}, static_cast<int>(n));
    return b;
  }

  // The body {0} in dimension n.
  static Body origin(int n) { return polytope({}, n); }

  static Body ellipse(Point2 center, double a, double b, double rotation) {
    if (!(a >= b && b > 0.0)) throw std::invalid_argument("ellipse: need a >= b > 0");
    const Point2 q = rotate_into(center, rotation);
    if ((q.x * q.x) / (a * a) + (q.y * q.y) / (b * b) > 1.0 + 1e-12)
      throw std::invalid_argument("ellipse: origin must lie in the ellipse");
    return Body(Ellipse2{center, a, b, rotation});
  }

  // Ellipse with center p, one focus at the origin and eccentricity e.
  static Body ellipse_focal(Point2 center, double ecc) {
    if (!(ecc > 0.0 && ecc < 1.0)) throw std::invalid_argument("ellipse_focal: eccentricity must lie in (0,1)");
    const double dist = norm(center);
    if (!(dist > 0.0)) throw std::invalid_argument("ellipse_focal: center must differ from the focus");
    const double a = dist / ecc;
    return ellipse(center, a, a * std::sqrt(1.0 - ecc * ecc), std::atan2(center.y, center.x));
  }

  static Body hrep(int dim, std::vector<Constraint> rows) {
    if (dim < 1) throw std::invalid_argument("hrep: dimension must be >= 1");
    for (auto& r : rows) {
      if (static_cast<int>(r.normal.size()) != dim) throw std::invalid_argument("hrep: normal dimension mismatch");
      if (std::abs(norm(r.normal) - 1.0) > 1e-9) throw std::invalid_argument("hrep: normals must be unit vectors");
      if (!(r.bound >= 0.0)) throw std::invalid_argument("hrep: bounds must be >= 0");
    }
    return Body(HRep{dim, std::move(rows)}, dim);
  }

  static Body sampled_support(SphereGrid grid, std::vector<double> values) {
    if (values.size() != grid.size()) throw std::invalid_argument("sampled_support: value count mismatch");
    for (double v : values)
      if (!(v >= 0.0)) throw std::invalid_argument("sampled_support: values must be >= 0");
    const int d = grid.dim();
    return Body(SampledSupport{std::move(grid), std::move(values)}, d);
  }

  static Body scaled_sum(std::vector<ScaledTerm> terms) {
    if (terms.empty()) throw std::invalid_argument("scaled_sum: need at least one term");
    const int d = terms.front().body->dim();
    for (const auto& t : terms) {
      if (!(t.coeff >= 0.0)) throw std::invalid_argument("scaled_sum: coefficients must be >= 0");
      if (t.body->dim() != d) throw std::invalid_argument("scaled_sum: dimension mismatch");
    }
    return Body(ScaledSum{std::move(terms)}, d);
  }

  static Body polar_of(const Body& inner) {
    return Body(PolarOf{std::make_shared<const Body>(inner)}, inner.dim());
  }

  static Body projected(const Body& inner, Subspace E) {
    if (E.ambient_dim != inner.dim()) throw std::invalid_argument("project: subspace ambient dimension mismatch");
    if (E.dim() < 1) throw std::invalid_argument("project: subspace dimension must be >= 1");
    const int d = E.dim();
    return Body(Projected{std::make_shared<const Body>(inner), std::move(E)}, d);
  }

  int dim() const { return impl_->dim; }
  const Rep& rep() const { return impl_->rep; }

  template <class T>
  bool is() const {
    return std::holds_alternative<T>(impl_->rep);
  }
  template <class T>
  const T& as() const {
    return std::get<T>(impl_->rep);
  }

  std::string kind() const {
    static const char* names[] = {"ball",  "segment",   "polytope", "ellipse",  "hrep",
                                  "sampled_support", "scaled_sum", "polar_of", "projected"};
    return names[impl_->rep.index()];
  }

  // Unchecked evaluation; callers guarantee |u| = 1 and matching dimension.
  double support_unchecked(const Vec& u) const;
  double radial_unchecked(const Vec& u) const;
  double support2(Point2 u) const;
  double radial2(Point2 u) const;

  // Exact polygon for planar polytopes and bounded planar H-representations.
  const Polygon2* polygon2() const { return impl_->polygon ? &impl_->polygon->polygon() : nullptr; }

  static Point2 rotate_into(Point2 p, double rotation) {
    const double c = std::cos(rotation), s = std::sin(rotation);
    return {c * p.x + s * p.y, -s * p.x + c * p.y};
  }

 private:
  struct Impl {
    Rep rep;
    int dim = 0;
    // Planar caches: exact polygon of a polytope, or the dual hull
    // conv({theta_j / b_j} U {0}) of a planar H-representation.
    std::shared_ptr<const PolygonRadial> polygon;
    std::shared_ptr<const PolygonRadial> dual;
    // Half-spaces {<v/|v|, y> <= 1/|v|} describing the polar of a polytope.
    std::shared_ptr<const LinearProgram> polar_lp;
    std::shared_ptr<const LinearProgram> lp;
    std::vector<double> sample_angles;
    std::vector<std::size_t> sample_order;
    double hrep_floor = 0.0;
  };

  template <class T>
  explicit Body(T rep, int dim = -1) {
    auto impl = std::make_shared<Impl>();
    impl->rep = std::move(rep);
    impl->dim = dim >= 0 ? dim : natural_dim(impl->rep);
    build_caches(*impl);
    impl_ = std::move(impl);
  }

  static int natural_dim(const Rep& r) {
    if (auto* b = std::get_if<Ball>(&r)) return static_cast<int>(b->center.size());
    if (auto* s = std::get_if<Segment>(&r)) return static_cast<int>(s->x.size());
    if (std::holds_alternative<Ellipse2>(r)) return 2;
    return 0;
  }

  static void build_caches(Impl& impl);

  std::shared_ptr<const Impl> impl_;
};

// ---------------------------------------------------------------------------

inline void Body::build_caches(Impl& impl) {
  if (auto* p = std::get_if<Polytope>(&impl.rep)) {
    if (impl.dim == 2) {
      std::vector<Point2> pts{{0.0, 0.0}};
      for (const Vec& v : p->vertices) pts.push_back(to_point2(v));
      impl.polygon = std::make_shared<const PolygonRadial>(hull2(std::move(pts)));
    } else {
      LinearProgram lp;
      for (const Vec& v : p->vertices) {
        const double nv = norm(v);
        if (nv > 0) lp.constraints.push_back({(1.0 / nv) * v, 1.0 / nv});
      }
      impl.polar_lp = std::make_shared<const LinearProgram>(std::move(lp));
    }
  } else if (auto* h = std::get_if<HRep>(&impl.rep)) {
    if (impl.dim == 2) {
      // Zero bounds are half-planes through the origin: their dual points sit
      // at infinity and are represented at distance 1/floor.
      std::vector<double> finite;
      for (const auto& r : h->rows)
        if (std::isfinite(r.bound) && r.bound > 0) finite.push_back(r.bound);
      double typical = 1.0;
      if (!finite.empty()) {
        std::nth_element(finite.begin(), finite.begin() + static_cast<std::ptrdiff_t>(finite.size() / 2), finite.end());
        typical = std::clamp(finite[finite.size() / 2], 1e-6, 1e6);
      }
      const double floor = 1e-10 * typical;
      impl.hrep_floor = floor;
      std::vector<Point2> pts{{0.0, 0.0}};
      for (const auto& r : h->rows) {
        if (std::isinf(r.bound)) continue;
        pts.push_back((1.0 / std::max(r.bound, floor)) * to_point2(r.normal));
      }
      impl.dual = std::make_shared<const PolygonRadial>(hull2(std::move(pts)));
      // Bounded case: primal vertices are the duals of the hull edges.
      const auto& dv = impl.dual->polygon().vertices;
      if (impl.dual->origin_interior()) {
        std::vector<Point2> prim;
        for (std::size_t i = 0; i < dv.size(); ++i) {
          const Point2 a = dv[i], b = dv[(i + 1) % dv.size()];
          const double det = cross(a, b);
          prim.push_back({(b.y - a.y) / det, (a.x - b.x) / det});
        }
        impl.polygon = std::make_shared<const PolygonRadial>(hull2(std::move(prim)));
      }
    } else if (impl.dim >= 3) {
      impl.lp = std::make_shared<const LinearProgram>(LinearProgram{h->rows});
    }
  } else if (auto* s = std::get_if<SampledSupport>(&impl.rep)) {
    if (impl.dim == 2) {
      const std::size_t M = s->grid.size();
      impl.sample_order.resize(M);
      for (std::size_t j = 0; j < M; ++j) impl.sample_order[j] = j;
      std::vector<double> ang(M);
      for (std::size_t j = 0; j < M; ++j) ang[j] = std::atan2(s->grid.dir2(j).y, s->grid.dir2(j).x);
      std::sort(impl.sample_order.begin(), impl.sample_order.end(),
                [&](std::size_t a, std::size_t b) { return ang[a] < ang[b]; });
      for (std::size_t j : impl.sample_order) impl.sample_angles.push_back(ang[j]);
    }
  } else if (auto* ss = std::get_if<ScaledSum>(&impl.rep)) {
    if (impl.dim == 2) {
      bool all_polygons = true;
      for (const auto& t : ss->terms) all_polygons = all_polygons && t.body->polygon2();
      if (all_polygons) {
        Polygon2 acc{{{0.0, 0.0}}};
        for (const auto& t : ss->terms) {
          Polygon2 scaled = *t.body->polygon2();
          for (auto& v : scaled.vertices) v = t.coeff * v;
          acc = minkowski_sum(acc, scaled);
        }
        impl.polygon = std::make_shared<const PolygonRadial>(std::move(acc));
      }
    }
  }
}

inline double Body::support_unchecked(const Vec& u) const {
  const Impl& I = *impl_;
  if (I.dim == 2 && u.size() == 2) return support2(to_point2(u));
  return std::visit(
      [&](const auto& r) -> double {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, Ball>) {
          return dot(r.center, u) + r.radius;
        } else if constexpr (std::is_same_v<T, Segment>) {
          return std::max(dot(r.x, u), 0.0);
        } else if constexpr (std::is_same_v<T, Polytope>) {
          double h = 0.0;
          for (const Vec& v : r.vertices) h = std::max(h, dot(v, u));
          return h;
        } else if constexpr (std::is_same_v<T, Ellipse2>) {
          return support2(to_point2(u));
        } else if constexpr (std::is_same_v<T, HRep>) {
          if (I.dim == 1) {
            double h = kInf;
            for (const auto& row : r.rows)
              if (row.normal[0] * u[0] > 0) h = std::min(h, row.bound);
            return h;
          }
          return lp_max(*I.lp, u);
        } else if constexpr (std::is_same_v<T, SampledSupport>) {
          std::size_t best = 0;
          double bd = -kInf;
          for (std::size_t j = 0; j < r.grid.size(); ++j) {
            const double d = dot(r.grid.dir(j), u);
            if (d > bd) bd = d, best = j;
          }
          return r.values[best];
        } else if constexpr (std::is_same_v<T, ScaledSum>) {
          double h = 0.0;
          for (const auto& t : r.terms)
            if (t.coeff != 0.0) h += t.coeff * t.body->support_unchecked(u);
          return h;
        } else if constexpr (std::is_same_v<T, PolarOf>) {
          return ext_inv(r.inner->radial_unchecked(u));
        } else {
          return r.inner->support_unchecked(r.subspace.embed(u));
        }
      },
      I.rep);
}

inline double Body::support2(Point2 u) const {
  const Impl& I = *impl_;
  return std::visit(
      [&](const auto& r) -> double {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, Ball>) {
          return r.center[0] * u.x + r.center[1] * u.y + r.radius;
        } else if constexpr (std::is_same_v<T, Segment>) {
          return std::max(r.x[0] * u.x + r.x[1] * u.y, 0.0);
        } else if constexpr (std::is_same_v<T, Polytope>) {
          return std::max(0.0, polygon_support(I.polygon->polygon(), u));
        } else if constexpr (std::is_same_v<T, Ellipse2>) {
          const Point2 t = rotate_into(u, r.rotation);
          return dot(r.center, u) + std::sqrt(r.a * r.a * t.x * t.x + r.b * r.b * t.y * t.y);
        } else if constexpr (std::is_same_v<T, HRep>) {
          // Values at the floor come from zero bounds: report them as 0.
          const double h = ext_inv((*I.dual)(u));
          return h <= 2.0 * I.hrep_floor ? 0.0 : h;
        } else if constexpr (std::is_same_v<T, SampledSupport>) {
          const auto& ang = I.sample_angles;
          const std::size_t M = ang.size();
          const double a = std::atan2(u.y, u.x);
          auto it = std::upper_bound(ang.begin(), ang.end(), a);
          const std::size_t hi = (it == ang.end()) ? 0 : static_cast<std::size_t>(it - ang.begin());
          const std::size_t lo = (hi + M - 1) % M;
          double span = ang[hi] - ang[lo];
          double off = a - ang[lo];
          if (span <= 0) span += 2 * std::numbers::pi;
          if (off < 0) off += 2 * std::numbers::pi;
          const double t = span > 0 ? off / span : 0.0;
          const double vlo = r.values[I.sample_order[lo]], vhi = r.values[I.sample_order[hi]];
          if (std::isinf(vlo) || std::isinf(vhi)) return (t < 0.5 ? vlo : vhi);
          return (1 - t) * vlo + t * vhi;
        } else if constexpr (std::is_same_v<T, ScaledSum>) {
          double h = 0.0;
          for (const auto& t : r.terms)
            if (t.coeff != 0.0) h += t.coeff * t.body->support2(u);
          return h;
        } else if constexpr (std::is_same_v<T, PolarOf>) {
          return ext_inv(r.inner->radial2(u));
        } else {
          return r.inner->support_unchecked(r.subspace.embed({u.x, u.y}));
        }
      },
      I.rep);
}

inline double Body::radial_unchecked(const Vec& u) const {
  const Impl& I = *impl_;
  if (I.dim == 1) return support_unchecked(u);
  if (I.dim == 2 && u.size() == 2) return radial2(to_point2(u));
  return std::visit(
      [&](const auto& r) -> double {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, Ball>) {
          const double cu = dot(r.center, u);
          const double disc = r.radius * r.radius - dot(r.center, r.center) + cu * cu;
          return std::max(0.0, cu + std::sqrt(std::max(0.0, disc)));
        } else if constexpr (std::is_same_v<T, Segment>) {
          const double len = norm(r.x);
          if (len == 0.0) return 0.0;
          // Angular tolerance 1e-9, measured by the rejection of x from u.
          const double c = dot(r.x, u);
          return c > 0 && norm(r.x - c * u) <= 1e-9 * len ? len : 0.0;
        } else if constexpr (std::is_same_v<T, Polytope>) {
          return ext_inv(lp_max(*I.polar_lp, u));
        } else if constexpr (std::is_same_v<T, HRep>) {
          double rr = kInf;
          for (const auto& row : r.rows) {
            const double d = dot(row.normal, u);
            if (d > 0) rr = std::min(rr, row.bound / d);
          }
          return rr;
        } else if constexpr (std::is_same_v<T, PolarOf>) {
          return ext_inv(r.inner->support_unchecked(u));
        } else if constexpr (std::is_same_v<T, Ellipse2>) {
          return radial2(to_point2(u));
        } else {
          throw UnsupportedRepresentation("radial: not available for " + std::string(typeid(T).name()));
        }
      },
      I.rep);
}

inline double Body::radial2(Point2 u) const {
  const Impl& I = *impl_;
  return std::visit(
      [&](const auto& r) -> double {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, Ball>) {
          const double cu = r.center[0] * u.x + r.center[1] * u.y;
          const double cc = r.center[0] * r.center[0] + r.center[1] * r.center[1];
          const double disc = r.radius * r.radius - cc + cu * cu;
          return std::max(0.0, cu + std::sqrt(std::max(0.0, disc)));
        } else if constexpr (std::is_same_v<T, Segment>) {
          const Point2 x = to_point2(r.x);
          const double len = norm(x);
          if (len == 0.0) return 0.0;
          // Angular tolerance 1e-9 between u and x/|x|.
          if (dot(x, u) > 0 && std::abs(cross(x, u)) <= 1e-9 * len) return len;
          return 0.0;
        } else if constexpr (std::is_same_v<T, Polytope>) {
          return (*I.polygon)(u);
        } else if constexpr (std::is_same_v<T, Ellipse2>) {
          const Point2 t = rotate_into(u, r.rotation);
          const Point2 q = rotate_into(r.center, r.rotation);
          const double ia = 1.0 / (r.a * r.a), ib = 1.0 / (r.b * r.b);
          const double A = t.x * t.x * ia + t.y * t.y * ib;
          const double B = -2.0 * (t.x * q.x * ia + t.y * q.y * ib);
          const double C = q.x * q.x * ia + q.y * q.y * ib - 1.0;
          const double disc = std::max(0.0, B * B - 4 * A * C);
          // Larger root; the stable form avoids cancellation when B < 0.
          const double sq = std::sqrt(disc);
          const double root = B <= 0 ? (-B + sq) / (2 * A) : (-2 * C) / (B + sq);
          return std::max(0.0, root);
        } else if constexpr (std::is_same_v<T, HRep>) {
          if (I.polygon) return (*I.polygon)(u);
          double rr = kInf;
          for (const auto& row : r.rows) {
            const double d = row.normal[0] * u.x + row.normal[1] * u.y;
            if (d > 0) rr = std::min(rr, row.bound / d);
          }
          return rr;
        } else if constexpr (std::is_same_v<T, ScaledSum>) {
          if (I.polygon) return (*I.polygon)(u);
          throw UnsupportedRepresentation("radial: not available for a lazy Minkowski combination");
        } else if constexpr (std::is_same_v<T, PolarOf>) {
          return ext_inv(r.inner->support2(u));
        } else if constexpr (std::is_same_v<T, Projected>) {
          throw UnsupportedRepresentation("radial: not available for a projected body");
        } else {
          throw UnsupportedRepresentation("radial: not available for sampled support data");
        }
      },
      I.rep);
}

// ---------------------------------------------------------------------------
// Checked evaluation

inline double support(const Body& K, const Vec& theta) {
  if (static_cast<int>(theta.size()) != K.dim()) throw std::invalid_argument("support: dimension mismatch");
  require_unit(theta, "support");
  return K.support_unchecked(theta);
}

inline double radial(const Body& K, const Vec& theta) {
  if (static_cast<int>(theta.size()) != K.dim()) throw std::invalid_argument("radial: dimension mismatch");
  require_unit(theta, "radial");
  return K.radial_unchecked(theta);
}

// ---------------------------------------------------------------------------
// Star bodies

class StarBody {
 public:
  StarBody() = default;
  StarBody(SphereGrid grid, std::vector<double> radial) : grid_(std::move(grid)), radial_(std::move(radial)) {
    if (radial_.size() != grid_.size()) throw std::invalid_argument("StarBody: sample count does not match grid");
    for (double r : radial_)
      if (!(r >= 0.0)) throw std::invalid_argument("StarBody: radial values must lie in [0, inf]");
  }

  const SphereGrid& grid() const { return grid_; }
  int dim() const { return grid_.dim(); }
  std::size_t size() const { return radial_.size(); }
  const std::vector<double>& radial() const { return radial_; }
  double operator[](std::size_t j) const { return radial_[j]; }

  bool bounded() const {
    for (double r : radial_)
      if (std::isinf(r)) return false;
    return true;
  }

  // Boundary point r(theta_j) theta_j (finite entries only).
  Vec boundary_point(std::size_t j) const { return radial_[j] * grid_.dir(j); }

 private:
  SphereGrid grid_;
  std::vector<double> radial_;
};

inline void require_same_grid(const StarBody& A, const StarBody& B, const char* who) {
  if (!(A.grid() == B.grid())) throw std::invalid_argument(std::string(who) + ": star bodies live on different grids");
}

inline void require_grid_dim(const Body& K, const SphereGrid& g, const char* who) {
  if (K.dim() != g.dim()) throw std::invalid_argument(std::string(who) + ": grid dimension does not match body");
}

// Support function sampled on the grid, read as a radial function: this is
// the flower of K.
inline StarBody sample_support(const Body& K, const SphereGrid& grid) {
  require_grid_dim(K, grid, "sample_support");
  std::vector<double> r(grid.size());
  if (grid.dim() == 2)
    for (std::size_t j = 0; j < grid.size(); ++j) r[j] = std::max(0.0, K.support2(grid.dir2(j)));
  else
    for (std::size_t j = 0; j < grid.size(); ++j) r[j] = std::max(0.0, K.support_unchecked(grid.dir(j)));
  return StarBody(grid, std::move(r));
}

// Radial function of K on the grid (K viewed as a star body).
inline StarBody sample_radial(const Body& K, const SphereGrid& grid) {
  require_grid_dim(K, grid, "sample_radial");
  std::vector<double> r(grid.size());
  if (grid.dim() == 2)
    for (std::size_t j = 0; j < grid.size(); ++j) r[j] = std::max(0.0, K.radial2(grid.dir2(j)));
  else
    for (std::size_t j = 0; j < grid.size(); ++j) r[j] = std::max(0.0, K.radial_unchecked(grid.dir(j)));
  return StarBody(grid, std::move(r));
}

// a A ⊆ B, decided by radial domination on the common grid.
inline bool star_contains(const StarBody& A, const StarBody& B, double a = 1.0) {
  require_same_grid(A, B, "star_contains");
  for (std::size_t j = 0; j < A.size(); ++j) {
    const double lhs = a * A[j];
    if (std::isinf(B[j])) continue;
    if (!(lhs <= B[j] + 1e-9)) return false;
  }
  return true;
}

// Sup over the grid of ext_defect between two sample vectors.
inline double sup_defect(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("sup_defect: size mismatch");
  double d = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) d = std::max(d, ext_defect(a[j], b[j]));
  return d;
}

// Support samples of K on the grid (a plain vector, no star-body semantics).
inline std::vector<double> support_samples(const Body& K, const SphereGrid& grid) {
  return sample_support(K, grid).radial();
}

}  // namespace flowerkit
