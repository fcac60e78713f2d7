#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <random>

#include "flowerkit/expr.hpp"
#include "flowerkit/fleet.hpp"
#include "flowerkit/svg.hpp"

using namespace flowerkit;

namespace {

std::size_t offset_of(const std::string& text) {
  try {
    parse_expr(text);
  } catch (const ParseError& e) {
    return e.offset();
  }
  return std::string::npos;
}

Expr random_expr(std::mt19937_64& rng, int depth) {
  std::uniform_real_distribution<double> U(0.1, 3.0);
  std::uniform_int_distribution<int> pick(0, 11);
  if (depth == 0 || pick(rng) < 3) {
    if (pick(rng) % 2) return Expr::primitive({{"type", "ball"}, {"center", {0.0, 0.0}}, {"radius", U(rng)}});
    return Expr::primitive({{"type", "segment"}, {"x", {U(rng), -U(rng)}}});
  }
  static const std::vector<std::string> ops{"polar", "reciprocal", "flower", "core", "phi", "inns",
                                            "conv", "minkowski", "radialsum", "oplus", "scale", "project"};
  const std::string& op = ops[static_cast<std::size_t>(pick(rng))];
  std::vector<Expr> args{random_expr(rng, depth - 1)};
  if (op == "minkowski" || op == "radialsum" || op == "oplus") args.push_back(random_expr(rng, depth - 1));
  if (op == "scale") args.push_back(Expr::number(U(rng)));
  if (op == "project") args.push_back(Expr::vector(json::array({U(rng), U(rng)})));
  return Expr::apply(op, std::move(args));
}

std::vector<double> h(const Body& K, const SphereGrid& g) { return flower(K, g).radial(); }

}  // namespace

TEST(Parse, NestedApply) {
  const Expr e = parse_expr("polar(flower(segment([1,0])))");
  ASSERT_EQ(e.kind, Expr::Kind::Apply);
  EXPECT_EQ(e.op, "polar");
  ASSERT_EQ(e.args.size(), 1u);
  EXPECT_EQ(e.args[0].op, "flower");
  EXPECT_EQ(e.args[0].args[0].kind, Expr::Kind::Primitive);
  EXPECT_EQ(e.args[0].args[0].data["type"], "segment");
}

TEST(Parse, WhitespaceInsensitive) {
  EXPECT_EQ(parse_expr(" oplus ( segment( [1, 0] ) ,\n segment([0,1]) ) "), parse_expr("oplus(segment([1,0]),segment([0,1]))"));
}

TEST(Parse, ErrorOffsets) {
  EXPECT_EQ(offset_of("scale(ball([0,0],1),)"), 21u);
  EXPECT_EQ(offset_of("foo(1)"), 3u);
  EXPECT_NE(offset_of("scale(ball([0,0],1))"), std::string::npos);
  EXPECT_NE(offset_of("ball([0,0,],1)"), std::string::npos);
  EXPECT_NE(offset_of("minkowski(ball([0,0],1))"), std::string::npos);
  EXPECT_NE(offset_of(""), std::string::npos);
  EXPECT_NE(offset_of("ball([0,0],1) x"), std::string::npos);
  // Offsets are deterministic.
  EXPECT_EQ(offset_of("polar(ball([0,0],1)"), offset_of("polar(ball([0,0],1)"));
}

TEST(Parse, JsonPrimitiveAndFileRef) {
  const Expr a = parse_expr(R"({"type":"ball","center":[0,0],"radius":2})");
  EXPECT_EQ(a.kind, Expr::Kind::Primitive);
  const Expr b = parse_expr("polar(@bodies/x.json)");
  EXPECT_EQ(b.args[0].kind, Expr::Kind::FileRef);
  EXPECT_EQ(b.args[0].data, "bodies/x.json");
}

TEST(Parse, RoundTripRandomExpressions) {
  std::mt19937_64 rng(42);
  for (int t = 0; t < 300; ++t) {
    const Expr e = random_expr(rng, 5);
    const std::string text = print_expr(e);
    EXPECT_EQ(parse_expr(text), e) << text;
  }
}

TEST(Eval, DoubleReciprocalOfBall) {
  Evaluator ev({2, 4096, 0});
  const Body K = ev.as_body(ev.eval(parse_expr("reciprocal(reciprocal(ball([0,0],2)))")));
  const SphereGrid g = make_grid(2, 4096, 0);
  for (double v : h(K, g)) EXPECT_NEAR(v, 2.0, 1e-9);
  EXPECT_EQ(ev.reports().size(), 2u);
}

TEST(Eval, PhiFlowerIsPolar) {
  Evaluator ev({2, 4096, 0});
  for (const auto& m : default_fleet()) {
    if (m.family == "segment") continue;
    const json j = body_to_json(m.body);
    const std::string text = j.dump();
    const StarBody A = ev.as_star(ev.eval(parse_expr("phi(flower(" + text + "))")));
    const StarBody B = ev.as_star(ev.eval(parse_expr("polar(" + text + ")")));
    EXPECT_LE(sup_defect(A.radial(), B.radial()), 1e-6) << m.name;
  }
}

TEST(Eval, ConvOfFlowerIsFlowerOfDoublePrime) {
  Evaluator ev({2, 4096, 0});
  const StarBody A = ev.as_star(ev.eval(parse_expr("conv(flower(polytope([1,1],[-1,1],[-1,-1],[1,-1])))")));
  const Body sq = Body::polytope({{1, 1}, {-1, 1}, {-1, -1}, {1, -1}});
  const SphereGrid g = make_grid(2, 4096, 0);
  EXPECT_LE(sup_defect(A.radial(), h(reciprocal(reciprocal(sq, g), g), g)), 1e-6);
}

TEST(Eval, OplusOfSegmentsIsFocalEllipse) {
  Evaluator ev({2, 4096, 0});
  const Body E = ev.as_body(ev.eval(parse_expr("oplus(segment([1,0]),segment([0,1]))")));
  const Body want = Body::ellipse_focal({0.5, 0.5}, 1 / std::sqrt(2.0));
  const SphereGrid g = make_grid(2, 4096, 0);
  EXPECT_LE(sup_defect(h(E, g), h(want, g)), 1e-5);
}

TEST(Eval, TypeRoutingAndErrors) {
  Evaluator ev({2, 512, 0});
  EXPECT_TRUE(std::holds_alternative<StarBody>(ev.eval(parse_expr("flower(ball([0,0],1))"))));
  EXPECT_TRUE(std::holds_alternative<Body>(ev.eval(parse_expr("core(flower(ball([0,0],1)))"))));
  EXPECT_TRUE(std::holds_alternative<Body>(ev.eval(parse_expr("reciprocal(flower(ball([0,0],1)))"))));
  EXPECT_TRUE(std::holds_alternative<StarBody>(ev.eval(parse_expr("inns(ball([0,0],1))"))));
  EXPECT_THROW(ev.eval(parse_expr("ball([0,0,0],1)")), std::invalid_argument);
  EXPECT_FALSE(ev.as_star(ev.eval(parse_expr("flower(polar(segment([1,0])))"))).bounded());
  EXPECT_THROW(ev.eval(parse_expr("scale(ball([0,0],1),-1)")), std::invalid_argument);
  const Value p = ev.eval(parse_expr("project(polytope([1,1],[-1,1],[-1,-1],[1,-1]),[1,0])"));
  EXPECT_EQ(std::get<Body>(p).dim(), 1);
}

TEST(Eval, CoreReportMeasuresRoundTrip) {
  Evaluator ev({2, 1024, 0});
  ev.eval(parse_expr("core(flower(ellipse_focal([1,0],0.5)))"));
  ASSERT_EQ(ev.reports().size(), 2u);
  EXPECT_EQ(ev.reports().back().op, "core");
  EXPECT_LE(ev.reports().back().defect, 1e-9);
}

TEST(Io, JsonRoundTrip) {
  for (const auto& m : default_fleet()) {
    const json j = body_to_json(m.body);
    ASSERT_FALSE(j.is_null()) << m.name;
    EXPECT_EQ(body_to_json(body_from_json(j)), j) << m.name;
  }
  EXPECT_THROW(body_from_json(json{{"type", "blob"}}), std::invalid_argument);
  EXPECT_TRUE(std::isinf(ext_from_json("inf")));
  EXPECT_EQ(ext_to_json(kInf), "inf");
}

TEST(Io, FileReference) {
  const std::string path = testing::TempDir() + "flowerkit_seg.json";
  std::ofstream(path) << R"({"type":"segment","x":[2,0]})";
  Evaluator ev({2, 256, 0});
  const Body K = ev.as_body(ev.eval(parse_expr("@" + path)));
  EXPECT_NEAR(support(K, {1, 0}), 2.0, 1e-15);
  std::remove(path.c_str());
  EXPECT_THROW(ev.eval(parse_expr("@" + path)), std::invalid_argument);
}

TEST(Svg, EmptyAndDeterministic) {
  const std::string empty = render_svg({});
  EXPECT_NE(empty.find("<svg"), std::string::npos);
  EXPECT_NE(empty.find("</svg>"), std::string::npos);
  const SphereGrid g = make_grid(2, 512, 0);
  const auto a = render_svg(figure_panels(1, g));
  const auto b = render_svg(figure_panels(1, g));
  EXPECT_EQ(a, b);
  EXPECT_NE(a.find("stroke-dasharray"), std::string::npos);
}
