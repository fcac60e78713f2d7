#pragma once

// Named check suites run over a fleet: operator identities, reciprocal
// classification, flower structure and the inequality chain.

#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "flowerkit/fleet.hpp"
#include "flowerkit/functionals.hpp"

namespace flowerkit {

struct CheckRecord {
  std::string name;
  double value = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

inline CheckRecord at_most(std::string name, double value, double tol) { return {std::move(name), value, tol, value <= tol}; }
inline CheckRecord at_least(std::string name, double value, double tol) { return {std::move(name), value, tol, value >= tol}; }

// sup_j (a_j - b_j)^+ / max(1, |a_j|, |b_j|): how far a exceeds b.
inline double excess(const std::vector<double>& a, const std::vector<double>& b) {
  double d = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (std::isinf(b[j]) && b[j] > 0) continue;
    if (std::isinf(a[j])) return kInf;
    d = std::max(d, std::max(0.0, a[j] - b[j]) / std::max({1.0, std::abs(a[j]), std::abs(b[j])}));
  }
  return d;
}

inline std::vector<CheckRecord> identity_suite(const std::vector<FleetMember>& fleet, const SphereGrid& g, double tol = 1e-6) {
  std::vector<CheckRecord> out;
  for (const auto& m : fleet) {
    const Body& K = m.body;
    const Body K1 = reciprocal(K, g);
    const Body K2 = reciprocal(K1, g);
    const Body K3 = reciprocal(K2, g);
    const Body P = polar(K, g);
    const auto hK = flower(K, g).radial();
    const auto h1 = flower(K1, g).radial();
    const auto h2 = flower(K2, g).radial();
    const auto h3 = flower(K3, g).radial();
    const auto hP = flower(P, g).radial();
    const StarBody rK = sample_radial(K, g);
    const StarBody rP = sample_radial(P, g);
    const std::string p = m.name + ".";
    out.push_back(at_most(p + "triple_prime", sup_defect(h3, h1), tol));
    out.push_back(at_most(p + "double_prime_contains", excess(hK, h2), tol));
    out.push_back(at_most(p + "prime_in_polar", excess(h1, hP), tol));
    // (K♣)° has support 1/r_{conv K♣}.
    out.push_back(at_most(p + "polar_flower_is_prime", sup_defect(phi(star_conv(flower(K, g))).radial(), h1), tol));
    out.push_back(at_most(p + "phi_flower_is_polar", sup_defect(phi(flower(K, g)).radial(), rP.radial()), tol));
    out.push_back(at_most(p + "phi_polar_is_flower", sup_defect(phi(rP).radial(), hK), tol));
    out.push_back(at_most(p + "flower_polar_is_phi", sup_defect(hP, phi(rK).radial()), tol));
    out.push_back(at_most(p + "prime_of_polar", sup_defect(flower(reciprocal(P, g), g).radial(),
                                                             flower(polar_star(phi(rK)), g).radial()), tol));
    out.push_back(at_most(p + "polar_involution", sup_defect(flower(polar(P, g), g).radial(), hK), tol));
  }
  return out;
}

inline bool expected_reciprocal(const FleetMember& m) {
  return m.family == "ball" || m.family == "ellipse" || m.family == "segment";
}

inline std::vector<CheckRecord> classification_suite(const std::vector<FleetMember>& fleet, const SphereGrid& g) {
  std::vector<CheckRecord> out;
  for (const auto& m : fleet) {
    const ClassVerdict rec = is_reciprocal(m.body, g);
    const ClassVerdict fl = is_flower(phi(flower(m.body, g)));
    out.push_back({m.name + ".agrees_with_flower_convexity", rec.defect, rec.tol, rec.holds == fl.holds});
    if (m.family == "ball" || m.family == "ellipse") out.push_back(at_most(m.name + ".reciprocal", rec.defect, 1e-6));
    if (m.family == "polygon" || m.family == "square" || m.family == "cross")
      out.push_back(at_least(m.name + ".not_reciprocal", rec.defect, 1e-2));
  }
  return out;
}

inline std::vector<CheckRecord> flower_structure_suite(const std::vector<FleetMember>& fleet, const SphereGrid& g) {
  std::vector<CheckRecord> out;
  int pairs = 0;
  for (std::size_t i = 0; i < fleet.size() && pairs < 50; ++i)
    for (std::size_t k = i; k < fleet.size() && pairs < 50; k += 3, ++pairs) {
      const StarBody S = flower_sum(flower(fleet[i].body, g), flower(fleet[k].body, g));
      out.push_back(at_most("flower_sum." + fleet[i].name + "+" + fleet[k].name, is_flower(S, 1e-3).defect, 1e-3));
    }
  std::vector<const FleetMember*> rec;
  for (const auto& m : fleet)
    if (m.family == "ball" || m.family == "ellipse") rec.push_back(&m);
  for (std::size_t i = 0; i < rec.size(); ++i)
    for (std::size_t k = i; k < rec.size(); ++k) {
      const Body H = polar(minkowski(polar(rec[i]->body, g), polar(rec[k]->body, g)), g);
      out.push_back(at_most("harmonic." + rec[i]->name + "+" + rec[k]->name, is_reciprocal(H, g, 1e-3).defect, 1e-3));
    }
  for (const auto* m : rec)
    out.push_back(at_most("oplus_self." + m->name, sup_defect(flower(oplus(m->body, m->body, g), g).radial(),
                                                                flower(scale(m->body, 2.0), g).radial()), 1e-6));
  for (const auto& m : fleet)
    if (m.family == "square")
      out.push_back(at_least("oplus_self." + m.name, sup_defect(flower(oplus(m.body, m.body, g), g).radial(),
                                                                  flower(scale(m.body, 2.0), g).radial()), 1e-2));
  return out;
}

inline std::vector<CheckRecord> inequality_suite(const std::vector<FleetMember>& fleet, const SphereGrid& g) {
  std::vector<CheckRecord> out;
  auto add = [&](const std::string& prefix, const InequalityVerdict& v) {
    out.push_back({prefix + "." + v.name, v.slack, -v.tolerance, v.holds});
  };
  for (std::size_t i = 0; i < fleet.size(); ++i) {
    const FleetMember& m = fleet[i];
    for (const auto& v : quermass_chain(m.body, g)) add(m.name, v);
    for (const auto& v : flower_dominates_classical(m.body, g)) add(m.name, v);
    const FleetMember& t = fleet[(i + 7) % fleet.size()];
    const std::string pair = m.name + "+" + t.name;
    add(pair, reverse_brunn_minkowski(m.body, t.body, g));
    add(pair, flower_af_quadratic({m.body, t.body}, g));
    add(pair, flower_af_product({m.body, t.body}, g));
  }
  return out;
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"identities", "classification", "flowers", "inequalities"};
  return names;
}

inline std::vector<CheckRecord> run_suite(const std::string& name, const std::vector<FleetMember>& fleet, const SphereGrid& g) {
  if (name == "identities") return identity_suite(fleet, g);
  if (name == "classification") return classification_suite(fleet, g);
  if (name == "flowers") return flower_structure_suite(fleet, g);
  if (name == "inequalities") return inequality_suite(fleet, g);
  throw std::invalid_argument("check: unknown suite '" + name + "'");
}

}  // namespace flowerkit
