#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "flowerkit/arithmetic.hpp"
#include "flowerkit/fleet.hpp"

using namespace flowerkit;

namespace {

const SphereGrid& G() {
  static const SphereGrid g = make_grid(2, 4096, 0);
  return g;
}

const SphereGrid& Gc() {
  static const SphereGrid g = make_grid(2, 1024, 0);
  return g;
}

Body square() { return Body::polytope({{1, 1}, {-1, 1}, {-1, -1}, {1, -1}}); }

std::vector<double> h(const Body& K, const SphereGrid& g) { return flower(K, g).radial(); }

// sup_j (a_j - b_j)^+ scaled like ext_defect.
double over(const std::vector<double>& a, const std::vector<double>& b) {
  double d = 0;
  for (std::size_t j = 0; j < a.size(); ++j) d = std::max(d, (a[j] - b[j]) / std::max({1.0, a[j], b[j]}));
  return d;
}

StarBody scaled(const StarBody& A, double t) {
  std::vector<double> r = A.radial();
  for (auto& v : r) v *= t;
  return StarBody(A.grid(), r);
}

}  // namespace

TEST(Scale, Examples) {
  const Body B = scale(Body::ball({0.1, 0.2}, 0.5), 2);
  ASSERT_TRUE(B.is<Ball>());
  EXPECT_DOUBLE_EQ(B.as<Ball>().center[0], 0.2);
  EXPECT_DOUBLE_EQ(B.as<Ball>().radius, 1.0);
  for (double v : h(scale(square(), 0), G())) EXPECT_EQ(v, 0.0);
  EXPECT_THROW(scale(square(), -1), std::invalid_argument);
}

TEST(Scale, LinearOnFleet) {
  for (const auto& m : default_fleet()) {
    const auto a = h(m.body, G());
    const auto b = h(scale(m.body, 3), G());
    for (std::size_t j = 0; j < a.size(); ++j) EXPECT_NEAR(b[j], 3 * a[j], 1e-12 * std::max(1.0, b[j])) << m.name;
  }
}

TEST(Scale, PolarAndNegation) {
  const Body P = scale(polar(square(), G()), 2);
  EXPECT_NEAR(support(P, {1, 0}), 2.0, 1e-12);
  const Body T = negate_vertices(Body::polytope({{1, 0}, {0, 2}}));
  EXPECT_NEAR(support(T, {0, -1}), 2.0, 1e-15);
  EXPECT_THROW(negate_vertices(Body::ball({0, 0}, 1)), UnsupportedRepresentation);
}

TEST(Minkowski, SquarePlusDisc) {
  const Body S = minkowski(square(), Body::ball({0, 0}, 1));
  const auto a = h(S, G()), b = h(square(), G());
  for (std::size_t j = 0; j < a.size(); ++j) EXPECT_NEAR(a[j], b[j] + 1, 1e-14);
}

TEST(Minkowski, BallsThroughOrigin) {
  // B_x + B_y = B((x+y)/2, (|x|+|y|)/2).
  const Point2 x{1, 0}, y{0.3, 0.4};
  const Body S = minkowski(Body::ball({0.5, 0}, 0.5), Body::ball({0.15, 0.2}, 0.25));
  ASSERT_TRUE(S.is<Ball>());
  EXPECT_NEAR(S.as<Ball>().center[0], (x.x + y.x) / 2, 1e-15);
  EXPECT_NEAR(S.as<Ball>().center[1], (x.y + y.y) / 2, 1e-15);
  EXPECT_NEAR(S.as<Ball>().radius, (norm(x) + norm(y)) / 2, 1e-15);
}

TEST(Minkowski, SegmentsMakeParallelogram) {
  const Body P = minkowski(Body::segment({1, 0}), Body::segment({0, 1}));
  const auto a = h(P, G());
  for (std::size_t j = 0; j < G().size(); ++j) {
    const Point2 u = G().dir2(j);
    const double want = std::max({0.0, u.x, u.y, u.x + u.y});
    EXPECT_NEAR(a[j], want, 1e-14);
  }
  EXPECT_THROW(minkowski(square(), Body::ball({0, 0, 0}, 1)), std::invalid_argument);
}

TEST(Minkowski, PolygonSumIsExact) {
  const Body P = minkowski(square(), Body::polytope({{1.2, -0.4}, {-0.5, 0.9}, {-0.6, -0.8}}));
  ASSERT_NE(P.polygon2(), nullptr);
  const auto a = h(P, G());
  const auto b = h(square(), G());
  const auto c = h(Body::polytope({{1.2, -0.4}, {-0.5, 0.9}, {-0.6, -0.8}}), G());
  for (std::size_t j = 0; j < a.size(); ++j) EXPECT_NEAR(a[j], b[j] + c[j], 1e-13);
}

TEST(RadialSum, Examples) {
  const auto& f = default_fleet();
  for (std::size_t i = 0; i + 5 < f.size(); i += 4) {
    const StarBody S = radial_sum(flower(f[i].body, G()), flower(f[i + 5].body, G()));
    EXPECT_LE(sup_defect(S.radial(), h(minkowski(f[i].body, f[i + 5].body), G())), 1e-9);
  }
  const StarBody A = flower(square(), G());
  EXPECT_EQ(radial_sum(A, StarBody(G(), std::vector<double>(G().size(), 0.0))).radial(), A.radial());
  const StarBody S = radial_sum(flower(Body::ball({0, 0}, 1), G()), flower(Body::ball({0, 0}, 2), G()));
  for (double r : S.radial()) EXPECT_DOUBLE_EQ(r, 3.0);
  EXPECT_THROW(radial_sum(A, flower(square(), Gc())), std::invalid_argument);
}

TEST(FlowerSum, AgreesWithDenseUnionOfBalls) {
  // Oracle: max over pairs x in K, y in T taken densely along both polygon
  // boundaries of the ray hit of B((x+y)/2, (|x|+|y|)/2).
  const Body K = square();
  const Body T = Body::polytope({{1.2, -0.4}, {-0.5, 0.9}, {-0.6, -0.8}});
  const StarBody S = flower_sum(flower(K, Gc()), flower(T, Gc()));
  auto boundary = [](const Polygon2& P) {
    std::vector<Point2> pts;
    const auto& v = P.vertices;
    for (std::size_t i = 0; i < v.size(); ++i)
      for (int t = 0; t < 40; ++t) pts.push_back(v[i] + (t / 40.0) * (v[(i + 1) % v.size()] - v[i]));
    return pts;
  };
  const auto PK = boundary(*K.polygon2()), PT = boundary(*T.polygon2());
  for (std::size_t j = 0; j < Gc().size(); j += 37) {
    const Point2 u = Gc().dir2(j);
    double best = 0;
    for (Point2 x : PK)
      for (Point2 y : PT) {
        const Point2 c = 0.5 * (x + y);
        const double rho = 0.5 * (norm(x) + norm(y));
        const double cu = dot(c, u);
        best = std::max(best, cu + std::sqrt(std::max(0.0, rho * rho - dot(c, c) + cu * cu)));
      }
    EXPECT_GE(S[j], best - 1e-9);
    EXPECT_LE(S[j], best + 1e-3);
  }
}

TEST(FlowerSum, IsAFlower) {
  const auto f = default_fleet();
  for (std::size_t i = 0; i < f.size(); i += 5)
    for (std::size_t k = i + 1; k < f.size(); k += 9) {
      const StarBody S = flower_sum(flower(f[i].body, Gc()), flower(f[k].body, Gc()));
      EXPECT_TRUE(is_flower(S, 1e-3).holds) << f[i].name << "+" << f[k].name;
    }
}

TEST(FlowerSum, Errors) {
  const StarBody A = flower(square(), Gc());
  EXPECT_THROW(flower_sum(A, flower(square(), G())), std::invalid_argument);
  std::vector<double> r(Gc().size(), 1.0);
  r[3] = kInf;
  EXPECT_THROW(flower_sum(A, StarBody(Gc(), r)), UnboundedBody);
}

TEST(Oplus, SegmentsGiveFocalEllipse) {
  const Point2 x{1, 0}, y{0.2, 0.9};
  const Body E = oplus(Body::segment(to_vec(x)), Body::segment(to_vec(y)), G());
  const Point2 c = 0.5 * (x + y);
  const Body want = Body::ellipse_focal(c, norm(x + y) / (norm(x) + norm(y)));
  EXPECT_LE(sup_defect(h(E, G()), h(want, G())), 1e-5);
}

TEST(Oplus, IdentityAndCommutativity) {
  const auto f = default_fleet();
  const Body zero = Body::origin(2);
  for (std::size_t i = 0; i < f.size(); i += 3) {
    EXPECT_LE(sup_defect(h(oplus(f[i].body, zero, Gc()), Gc()), h(f[i].body, Gc())), 1e-9) << f[i].name;
    const Body& T = f[(i + 11) % f.size()].body;
    EXPECT_LE(sup_defect(h(oplus(f[i].body, T, Gc()), Gc()), h(oplus(T, f[i].body, Gc()), Gc())), 1e-9) << f[i].name;
  }
}

TEST(Oplus, ContainsMinkowskiAndIsMonotone) {
  const auto f = default_fleet();
  for (std::size_t i = 0; i < f.size(); i += 4) {
    const Body& K = f[i].body;
    const Body& T = f[(i + 5) % f.size()].body;
    const auto sum = h(oplus(K, T, Gc()), Gc());
    EXPECT_LE(over(h(minkowski(K, T), Gc()), sum), 1e-9) << f[i].name;
    EXPECT_LE(over(sum, h(oplus(scale(K, 1.5), T, Gc()), Gc())), 1e-9) << f[i].name;
  }
}

TEST(Oplus, SelfSumOfReciprocalAndSquare) {
  const Body E = Body::ellipse_focal({1, 0}, 0.5);
  EXPECT_LE(sup_defect(h(oplus(E, E, G()), G()), h(scale(E, 2), G())), 1e-6);
  EXPECT_GT(sup_defect(h(oplus(square(), square(), G()), G()), h(scale(square(), 2), G())), 1e-2);
}

TEST(Oplus, ReciprocalClassIsClosed) {
  const Body A = Body::ellipse_focal({1, 0}, 0.25);
  const Body B = Body::ellipse_focal({0.6, -0.8}, 0.75);
  EXPECT_TRUE(is_reciprocal(oplus(A, B, Gc()), Gc(), 1e-3).holds);
  EXPECT_TRUE(is_reciprocal(oplus(A, Body::ball({0.3, 0}, 1), Gc()), Gc(), 1e-3).holds);
}

TEST(Convexity, FlowerMapIsConvex) {
  const auto f = default_fleet();
  for (double lam : {0.25, 0.5, 0.75})
    for (std::size_t i = 0; i < f.size(); i += 6) {
      const Body& K = f[i].body;
      const Body& T = f[(i + 13) % f.size()].body;
      const auto lhs = h(minkowski(scale(K, 1 - lam), scale(T, lam)), Gc());
      const StarBody rhs = flower_sum(scaled(flower(K, Gc()), 1 - lam), scaled(flower(T, Gc()), lam));
      EXPECT_LE(over(lhs, rhs.radial()), 1e-9) << f[i].name << " lambda=" << lam;
    }
}

TEST(Convexity, PhiIsConvexOnStarBodies) {
  // The radial sum sits inside the Minkowski sum, so the harmonic-mean bound
  // on radial values is enough.
  const auto f = default_fleet();
  for (std::size_t i = 0; i + 1 < f.size(); i += 7) {
    const StarBody A = sample_radial(f[i].body, Gc());
    const StarBody B = sample_radial(f[i + 1].body, Gc());
    bool ok = true;
    for (std::size_t j = 0; j < Gc().size(); ++j) {
      if (A[j] == 0 || B[j] == 0) continue;
      const double lhs = 1 / (0.5 * A[j] + 0.5 * B[j]);
      ok = ok && lhs <= 0.5 / A[j] + 0.5 / B[j] + 1e-12;
    }
    EXPECT_TRUE(ok);
  }
}

TEST(Convexity, ReciprocalIsOplusConvex) {
  const Body K = Body::ellipse_focal({1, 0}, 0.25);
  const Body T = Body::ball({0.3, 0}, 1);
  for (double lam : {0.25, 0.5, 0.75}) {
    const auto lhs = h(reciprocal(oplus(scale(K, 1 - lam), scale(T, lam), Gc()), Gc()), Gc());
    const auto rhs = h(oplus(scale(reciprocal(K, Gc()), 1 - lam), scale(reciprocal(T, Gc()), lam), Gc()), Gc());
    EXPECT_LE(over(lhs, rhs), 1e-6) << lam;
  }
}

TEST(Oplus, AssociativeUpToGridError) {
  const Body A = Body::segment({1, 0});
  const Body B = Body::ellipse_focal({0.6, -0.8}, 0.75);
  const Body C = square();
  const auto lhs = h(oplus(oplus(A, B, Gc()), C, Gc()), Gc());
  const auto rhs = h(oplus(A, oplus(B, C, Gc()), Gc()), Gc());
  EXPECT_LE(sup_defect(lhs, rhs), 5e-3);
}

TEST(Convexity, PreReciprocalSegmentOverFleet) {
  for (const auto& m : default_fleet()) {
    if (m.family != "polygon" && m.family != "square" && m.family != "cross") continue;
    const Body K1 = reciprocal(m.body, G());
    const Body K2 = reciprocal(K1, G());
    const auto want = h(K1, G());
    for (double lam : {0.25, 0.5, 0.75})
      EXPECT_LE(sup_defect(h(reciprocal(minkowski(scale(m.body, lam), scale(K2, 1 - lam)), G()), G()), want), 1e-6)
          << m.name << " lambda=" << lam;
  }
}
