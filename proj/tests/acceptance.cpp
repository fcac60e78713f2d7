// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>

#include "flowerkit/flowerkit.hpp"

using namespace flowerkit;

namespace {

int failures = 0;

void report(int id, const std::string& what, bool pass, const std::string& detail, double seconds) {
  std::printf("%s criterion %d: %s [%s] (%.2fs)\n", pass ? "PASS" : "FAIL", id, what.c_str(), detail.c_str(), seconds);
  std::fflush(stdout);
  if (!pass) ++failures;
}

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

template <class F>
void criterion(int id, const std::string& what, F&& body) {
  const auto t0 = std::chrono::steady_clock::now();
  bool pass = false;
  std::string detail;
  try {
    pass = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (s > 60.0) detail += ", over 60 s";
  report(id, what, pass && s <= 60.0, detail, s);
}

const SphereGrid& G() {
  static const SphereGrid g = make_grid(2, 4096, 0);
  return g;
}

std::vector<double> h(const Body& K, const SphereGrid& g) { return flower(K, g).radial(); }

Body square() { return Body::polytope({{1, 1}, {-1, 1}, {-1, -1}, {1, -1}}); }

bool all_pass(const std::vector<CheckRecord>& recs, std::string& detail) {
  std::size_t bad = 0;
  for (const auto& r : recs)
    if (!r.pass) ++bad;
  detail = std::to_string(recs.size()) + " records, " + std::to_string(bad) + " failing";
  return bad == 0 && !recs.empty();
}

int shell(const std::string& cmd) {
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

int main() {
  criterion(1, "flower of [0,e1] is max(cos, 0)", [](std::string& d) {
    const auto r = h(Body::segment({1, 0}), G());
    double err = 0;
    for (std::size_t j = 0; j < r.size(); ++j) err = std::max(err, std::abs(r[j] - std::max(G().dir(j)[0], 0.0)));
    d = "sup error " + num(err) + " <= 1e-12";
    return err <= 1e-12;
  });

  criterion(2, "polar of B_e2 is the paraboloid t = 1 - z^2/4", [](std::string& d) {
    const auto r = sample_radial(polar(Body::ball({0, 0.5}, 0.5), G()), G()).radial();
    double err = 0;
    std::size_t used = 0;
    for (std::size_t j = 0; j < r.size(); ++j) {
      if (std::isinf(r[j])) continue;
      const Point2 p = r[j] * G().dir2(j);
      err = std::max(err, std::abs(p.y - (1 - p.x * p.x / 4)) / std::max(1.0, std::abs(p.y)));
      ++used;
    }
    d = std::to_string(used) + " boundary samples, sup relative error " + num(err) + " <= 1e-6";
    return err <= 1e-6 && used > 0;
  });

  criterion(3, "focal ellipse: flower is B((1,0),2), reciprocal is the ellipse (-1/3,0), 2/3, 1/sqrt3", [](std::string& d) {
    const Body E = Body::ellipse_focal({1, 0}, 0.5);
    const double a = sup_defect(h(E, G()), sample_radial(Body::ball({1, 0}, 2), G()).radial());
    const Body want = Body::ellipse({-1.0 / 3, 0}, 2.0 / 3, 1 / std::sqrt(3.0), 0);
    const double b = sup_defect(h(reciprocal(E, G()), G()), h(want, G()));
    d = "flower " + num(a) + " <= 1e-9, reciprocal " + num(b) + " <= 1e-6";
    return a <= 1e-9 && b <= 1e-6;
  });

  criterion(4, "crossed segments: V = 2, V_flower = 1", [](std::string& d) {
    const Body K = Body::polytope({{1, 0}, {-1, 0}}), T = Body::polytope({{0, 1}, {0, -1}});
    const double v = classical_mixed_area_2d(K, T);
    const double vf = flower_mixed_volume({K, T}, G());
    d = "V = " + num(v) + ", V_flower = " + std::to_string(vf) + " (1 +- 1e-4)";
    return v == 2.0 && std::abs(vf - 1.0) <= 1e-4;
  });

  const auto fleet = default_fleet();

  criterion(5, "operator identities over the fleet at 1e-6", [&](std::string& d) { return all_pass(identity_suite(fleet, G()), d); });

  criterion(6, "reciprocal classification", [&](std::string& d) {
    bool ok = all_pass(classification_suite(fleet, G()), d);
    double worst_in = 0, least_out = kInf;
    for (const auto& m : fleet) {
      const double delta = is_reciprocal(m.body, G()).defect;
      if (m.family == "ball" || m.family == "ellipse") worst_in = std::max(worst_in, delta);
      if (m.family == "polygon" || m.family == "square") least_out = std::min(least_out, delta);
    }
    d += "; max delta on balls/ellipses " + num(worst_in) + ", min delta on polygons " + num(least_out);
    return ok && worst_in <= 1e-6 && least_out >= 1e-2;
  });

  criterion(7, "flower sums, harmonic sums, K+K vs 2K", [&](std::string& d) { return all_pass(flower_structure_suite(fleet, G()), d); });

  criterion(8, "[0,e1] (+) [0,e2] is the focal ellipse of eccentricity 1/sqrt2", [](std::string& d) {
    const Body A = Body::segment({1, 0}), B = Body::segment({0, 1});
    const auto xa = exact_extreme_points(A), xb = exact_extreme_points(B);
    const StarBody S = flower_sum(flower(A, G()), flower(B, G()), &*xa, &*xb);
    const double a = sup_defect(S.radial(), sample_radial(Body::ball({0.5, 0.5}, 1), G()).radial());
    const Body C = core(S);
    const double b = sup_defect(sample_radial(C, G()).radial(),
                                sample_radial(Body::ellipse_focal({0.5, 0.5}, 1 / std::sqrt(2.0)), G()).radial());
    d = "flower radial defect " + num(a) + ", core radial defect " + num(b) + " <= 1e-3";
    return a <= 1e-3 && b <= 1e-3;
  });

  criterion(9, "inequality suite and W_flower_1 = perimeter/2", [&](std::string& d) {
    bool ok = all_pass(inequality_suite(fleet, G()), d);
    double worst = 0;
    for (const auto& m : fleet)
      if (const Polygon2* P = m.body.polygon2())
        worst = std::max(worst, std::abs(quermass_flower(m.body, 1, G()) / (polygon_perimeter(*P) / 2) - 1));
    d += "; perimeter relative error " + num(worst) + " <= 5e-3";
    return ok && worst <= 5e-3;
  });

  criterion(10, "Kubota Monte-Carlo in R^3 within 3 standard errors", [](std::string& d) {
    const SphereGrid g3 = make_grid(3, 200000, 0);
    const Body ball = Body::ball({0, 0, 0}, 1);
    const Body poly = Body::polytope({{1, 0.2, -0.3}, {-0.5, 0.8, 0.1}, {0.1, -0.9, 0.4}, {-0.2, 0.1, -1.1},
                                      {0.7, 0.7, 0.6}, {-0.8, -0.4, 0.5}, {0.3, -0.2, -0.9}, {-0.6, 0.5, -0.7}});
    bool ok = true;
    for (const Body* K : {&ball, &poly})
      for (int i : {1, 2}) {
        const double direct = quermass_flower(*K, 3 - i, g3);
        const McEstimate e = quermass_kubota_mc(*K, i, 10000, 17);
        const double z = std::abs(e.estimate - direct);
        const double band = 3 * e.std_error + 1e-12 * std::abs(direct);
        ok = ok && z <= band;
        d += std::string(d.empty() ? "" : "; ") + (K == &ball ? "ball" : "polytope") + " i=" + std::to_string(i) +
             " |err| " + num(z) + " <= " + num(band);
      }
    return ok;
  });

  criterion(11, "(lK + (1-l)K'')' = K' for the square", [](std::string& d) {
    const Body K = square();
    const Body K1 = reciprocal(K, G());
    const Body K2 = reciprocal(K1, G());
    double worst = 0;
    for (double lam : {0.25, 0.5, 0.75}) {
      const Body mix = minkowski(scale(K, lam), scale(K2, 1 - lam));
      worst = std::max(worst, sup_defect(h(reciprocal(mix, G()), G()), h(K1, G())));
    }
    d = "sup defect " + num(worst) + " <= 1e-6";
    return worst <= 1e-6;
  });

  criterion(12, "d(A, B) <= 2 for centrally symmetric convex flowers", [&](std::string& d) {
    const StarBody disc = sample_radial(Body::ball({0, 0}, 1), G());
    std::vector<Body> bodies;
    for (const auto& m : fleet)
      if (m.family == "ball" || m.family == "square" || m.family == "cross") bodies.push_back(m.body);
    const std::size_t nsym = bodies.size();
    for (std::size_t k = 0; k < nsym; ++k) bodies.push_back(reciprocal(bodies[k], G()));
    double worst = 0;
    int used = 0;
    for (const Body& K : bodies) {
      const StarBody F = flower(K, G());
      if (!is_convex_star(F).holds) continue;
      worst = std::max(worst, geometric_distance(F, disc));
      ++used;
    }
    d = std::to_string(used) + " convex flowers, max distance " + std::to_string(worst) + " <= 2 + 1e-6";
    return used >= 6 && worst <= 2 + 1e-6;
  });

  criterion(13, "projection identities", [&](std::string& d) {
    const SphereGrid line = SphereGrid::line();
    double worst_prime = 0;
    for (const auto& m : fleet) {
      if (m.family != "ball" && m.family != "ellipse") continue;
      const Body Kp = reciprocal(m.body, G());
      for (const Subspace& E : sample_grassmannian(2, 1, 16, 2024)) {
        const auto lhs = h(reciprocal(project(m.body, E), line), line);
        const auto rhs = h(project(Kp, E), line);
        worst_prime = std::max(worst_prime, sup_defect(lhs, rhs));
      }
    }
    // Flower sections along grid lines compared with the sampled flower.
    double worst_section = 0;
    for (const auto& m : fleet) {
      const auto F = h(m.body, G());
      for (std::size_t j = 0; j < G().size() / 2; j += 64) {
        const Subspace E = orthonormal_subspace(2, {G().dir(j)});
        const auto P = h(project(m.body, E), line);
        const std::size_t k = static_cast<std::size_t>(G().antipode(j));
        const bool same = dot(E.basis[0], G().dir(j)) > 0;
        worst_section = std::max({worst_section, ext_defect(P[same ? 0 : 1], F[j]), ext_defect(P[same ? 1 : 0], F[k])});
      }
    }
    d = "(Proj K)' vs Proj K' " + num(worst_prime) + " <= 1e-3, flower section " + num(worst_section) + " <= 1e-9";
    return worst_prime <= 1e-3 && worst_section <= 1e-9;
  });

  criterion(14, "rendered figures are deterministic with closed paths", [](std::string& d) {
    bool ok = true;
    for (int fig : {1, 2}) {
      const std::string a = "acceptance_fig" + std::to_string(fig) + "_a.svg";
      const std::string b = "acceptance_fig" + std::to_string(fig) + "_b.svg";
      const std::string base = std::string(FLOWERKIT_CLI) + " render --figure " + std::to_string(fig) + " --out ";
      const int ca = shell(base + a + " > /dev/null"), cb = shell(base + b + " > /dev/null");
      const std::string sa = slurp(a), sb = slurp(b);
      std::size_t paths = 0, closed = 0, dashed = 0;
      for (std::size_t p = sa.find("<path"); p != std::string::npos; p = sa.find("<path", p + 1)) {
        ++paths;
        const std::size_t end = sa.find("/>", p);
        const std::string tag = sa.substr(p, end - p);
        if (tag.find(" Z\"") != std::string::npos) ++closed;
        if (tag.find("stroke-dasharray") != std::string::npos) ++dashed;
      }
      const bool good = ca == 0 && cb == 0 && !sa.empty() && sa == sb && paths == 6 && closed == paths && dashed == 3;
      d += std::string(d.empty() ? "" : "; ") + "fig " + std::to_string(fig) + ": " + std::to_string(paths) + " paths, " +
           std::to_string(closed) + " closed, " + std::to_string(dashed) + " dashed, " +
           (sa == sb && !sa.empty() ? "identical" : "differ");
      ok = ok && good;
      std::remove(a.c_str());
      std::remove(b.c_str());
    }
    return ok;
  });

  std::printf("%s: %d criteria failing\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
