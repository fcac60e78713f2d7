#pragma once

// JSON body schema:
//   {"type":"ball","center":[..],"radius":r}
//   {"type":"segment","x":[..]}
//   {"type":"polytope","vertices":[[..],..]}
//   {"type":"ellipse","center":[x,y],"a":a,"b":b,"rot":t}
//   {"type":"ellipse_focal","center":[x,y],"ecc":e}
//   {"type":"hrep","rows":[{"normal":[..],"bound":b},..]}
// Extended reals are written as the string "inf".

#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "flowerkit/bodies.hpp"

namespace flowerkit {

using json = nlohmann::json;

inline json ext_to_json(double v) {
  if (std::isinf(v)) return v > 0 ? json("inf") : json("-inf");
  return json(v);
}

inline double ext_from_json(const json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "inf") return kInf;
    if (s == "-inf") return -kInf;
    throw std::invalid_argument("expected a number or \"inf\", got \"" + s + "\"");
  }
  if (!j.is_number()) throw std::invalid_argument("expected a number");
  return j.get<double>();
}

namespace detail {

inline const json& field(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw std::invalid_argument(std::string("body JSON: missing field '") + key + "'");
  return *it;
}

inline Vec vec_from_json(const json& j, const char* what) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument(std::string("body JSON: '") + what + "' must be a nonempty array");
  Vec v;
  for (const auto& x : j) {
    if (!x.is_number()) throw std::invalid_argument(std::string("body JSON: '") + what + "' must contain numbers");
    v.push_back(x.get<double>());
  }
  return v;
}

inline double num(const json& j, const char* key) {
  const json& f = field(j, key);
  if (!f.is_number()) throw std::invalid_argument(std::string("body JSON: '") + key + "' must be a number");
  return f.get<double>();
}

}  // namespace detail

inline Body body_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("body JSON: expected an object");
  const std::string type = detail::field(j, "type").get<std::string>();
  if (type == "ball") return Body::ball(detail::vec_from_json(detail::field(j, "center"), "center"), detail::num(j, "radius"));
  if (type == "segment") return Body::segment(detail::vec_from_json(detail::field(j, "x"), "x"));
  if (type == "polytope") {
    const json& vs = detail::field(j, "vertices");
    if (!vs.is_array() || vs.empty()) throw std::invalid_argument("body JSON: 'vertices' must be a nonempty array");
    std::vector<Vec> v;
    for (const auto& x : vs) v.push_back(detail::vec_from_json(x, "vertices"));
    return Body::polytope(std::move(v));
  }
  if (type == "ellipse" || type == "ellipse_focal") {
    const Vec c = detail::vec_from_json(detail::field(j, "center"), "center");
    if (c.size() != 2) throw std::invalid_argument("body JSON: ellipse center must be planar");
    if (type == "ellipse_focal") return Body::ellipse_focal(to_point2(c), detail::num(j, "ecc"));
    return Body::ellipse(to_point2(c), detail::num(j, "a"), detail::num(j, "b"), j.contains("rot") ? detail::num(j, "rot") : 0.0);
  }
  if (type == "hrep") {
    const json& rows = detail::field(j, "rows");
    if (!rows.is_array() || rows.empty()) throw std::invalid_argument("body JSON: 'rows' must be a nonempty array");
    std::vector<Constraint> cs;
    for (const auto& r : rows) cs.push_back({detail::vec_from_json(detail::field(r, "normal"), "normal"), ext_from_json(detail::field(r, "bound"))});
    const int dim = static_cast<int>(cs.front().normal.size());
    return Body::hrep(dim, std::move(cs));
  }
  throw std::invalid_argument("body JSON: unknown type '" + type + "'");
}

inline json vec_to_json(const Vec& v) { return json(v); }

// JSON form of bodies with a schema entry; other variants yield null.
inline json body_to_json(const Body& K) {
  if (K.is<Ball>()) return {{"type", "ball"}, {"center", K.as<Ball>().center}, {"radius", K.as<Ball>().radius}};
  if (K.is<Segment>()) return {{"type", "segment"}, {"x", K.as<Segment>().x}};
  if (K.is<Polytope>()) {
    json v = json::array();
    for (const Vec& x : K.as<Polytope>().vertices) v.push_back(x);
    return {{"type", "polytope"}, {"vertices", v}};
  }
  if (K.is<Ellipse2>()) {
    const Ellipse2& e = K.as<Ellipse2>();
    return {{"type", "ellipse"}, {"center", {e.center.x, e.center.y}}, {"a", e.a}, {"b", e.b}, {"rot", e.rotation}};
  }
  if (K.is<HRep>()) {
    json rows = json::array();
    for (const auto& r : K.as<HRep>().rows) rows.push_back({{"normal", r.normal}, {"bound", ext_to_json(r.bound)}});
    return {{"type", "hrep"}, {"rows", rows}};
  }
  return nullptr;
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return json::parse(ss.str());
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("'" + path + "': " + e.what());
  }
}

}  // namespace flowerkit
