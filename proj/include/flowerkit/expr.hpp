#pragma once

// Body-expression language.
//
//   expr  := ident '(' arg (',' arg)* ')' | json-object | '@' path
//   arg   := expr | number | vector
//
// Operators: polar reciprocal flower core phi inns conv (one expression),
// minkowski radialsum oplus (two), scale (expression, number),
// project (expression, one or more basis vectors).
// Primitives: ball(c, r) segment(x) polytope(v1, v2, ...) ellipse(c, a, b[, rot])
// ellipse_focal(c, e) hrep([n.., b], ...) and the JSON body schema.
//
// Parse errors carry the byte offset just past the offending token.

#include <cctype>
#include <charconv>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "flowerkit/arithmetic.hpp"
#include "flowerkit/io.hpp"

namespace flowerkit {

struct Expr {
  enum class Kind { Apply, Primitive, FileRef, Number, Vector };
  Kind kind = Kind::Number;
  std::string op;  // Apply: operator name
  json data;       // Primitive: body JSON; FileRef: path; Number: value; Vector: array
  std::vector<Expr> args;

  static Expr apply(std::string op, std::vector<Expr> args) {
    Expr e;
    e.kind = Kind::Apply;
    e.op = std::move(op);
    e.args = std::move(args);
    return e;
  }
  static Expr primitive(json body) {
    Expr e;
    e.kind = Kind::Primitive;
    e.data = std::move(body);
    return e;
  }
  static Expr file(std::string path) {
    Expr e;
    e.kind = Kind::FileRef;
    e.data = std::move(path);
    return e;
  }
  static Expr number(double v) {
    Expr e;
    e.kind = Kind::Number;
    e.data = v;
    return e;
  }
  static Expr vector(json arr) {
    Expr e;
    e.kind = Kind::Vector;
    e.data = std::move(arr);
    return e;
  }

  bool is_body_expr() const { return kind == Kind::Apply || kind == Kind::Primitive || kind == Kind::FileRef; }

  friend bool operator==(const Expr& a, const Expr& b) {
    return a.kind == b.kind && a.op == b.op && a.data == b.data && a.args == b.args;
  }
};

enum class ArgKind { Body, Number, Vector };

struct OpSignature {
  std::vector<ArgKind> fixed;
  bool vector_tail = false;  // one or more trailing vectors
};

inline const std::map<std::string, OpSignature>& operator_table() {
  static const std::map<std::string, OpSignature> table{
      {"polar", {{ArgKind::Body}}},      {"reciprocal", {{ArgKind::Body}}},
      {"flower", {{ArgKind::Body}}},     {"core", {{ArgKind::Body}}},
      {"phi", {{ArgKind::Body}}},        {"inns", {{ArgKind::Body}}},
      {"conv", {{ArgKind::Body}}},       {"minkowski", {{ArgKind::Body, ArgKind::Body}}},
      {"radialsum", {{ArgKind::Body, ArgKind::Body}}},
      {"oplus", {{ArgKind::Body, ArgKind::Body}}},
      {"scale", {{ArgKind::Body, ArgKind::Number}}},
      {"project", {{ArgKind::Body}, true}},
  };
  return table;
}

inline bool is_primitive_name(std::string_view s) {
  return s == "ball" || s == "segment" || s == "polytope" || s == "ellipse" || s == "ellipse_focal" || s == "hrep";
}

// ---------------------------------------------------------------------------

namespace detail {

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  Expr parse() {
    skip();
    if (pos_ >= s_.size()) fail("empty expression", pos_);
    Expr e = parse_body();
    skip();
    if (pos_ < s_.size()) fail("unexpected trailing input", pos_ + 1);
    return e;
  }

 private:
  struct Arg {
    Expr expr;
    std::size_t end;
  };

  [[noreturn]] void fail(const std::string& what, std::size_t offset) const {
    throw ParseError(what, std::min(offset, s_.size()));
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  std::size_t after_token() const { return pos_ < s_.size() ? pos_ + 1 : s_.size(); }

  void expect(char c) {
    skip();
    if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'", after_token());
    ++pos_;
  }

  std::string ident() {
    const std::size_t b = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    return std::string(s_.substr(b, pos_ - b));
  }

  double number() {
    skip();
    const std::size_t b = pos_;
    while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || std::string_view("+-.eE").find(s_[pos_]) != std::string_view::npos))
      ++pos_;
    if (b == pos_) fail("expected a number", after_token());
    std::string_view tok = s_.substr(b, pos_ - b);
    if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
    double v = 0.0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size()) fail("malformed number", pos_);
    return v;
  }

  // Nested arrays of numbers.
  json vector() {
    expect('[');
    json arr = json::array();
    skip();
    if (pos_ < s_.size() && s_[pos_] == ']') fail("empty vector", pos_ + 1);
    for (;;) {
      skip();
      if (pos_ < s_.size() && s_[pos_] == '[')
        arr.push_back(vector());
      else
        arr.push_back(number());
      skip();
      if (pos_ < s_.size() && s_[pos_] == ',') {
        ++pos_;
        continue;
      }
      if (pos_ < s_.size() && s_[pos_] == ']') {
        ++pos_;
        break;
      }
      fail("malformed vector", after_token());
    }
    return arr;
  }

  json object_literal() {
    const std::size_t b = pos_;
    int depth = 0;
    bool in_str = false;
    for (; pos_ < s_.size(); ++pos_) {
      const char c = s_[pos_];
      if (in_str) {
        if (c == '\\') ++pos_;
        else if (c == '"') in_str = false;
        continue;
      }
      if (c == '"') in_str = true;
      else if (c == '{') ++depth;
      else if (c == '}' && --depth == 0) break;
    }
    if (pos_ >= s_.size()) fail("unterminated JSON object", s_.size());
    ++pos_;
    try {
      return json::parse(s_.substr(b, pos_ - b));
    } catch (const json::parse_error& e) {
      fail(std::string("malformed JSON body: ") + e.what(), b + e.byte);
    }
  }

  Expr checked_primitive(json body, std::size_t end) {
    try {
      (void)body_from_json(body);
    } catch (const std::invalid_argument& e) {
      fail(e.what(), end);
    } catch (const GeometryError& e) {
      fail(e.what(), end);
    }
    return Expr::primitive(std::move(body));
  }

  Arg parse_arg() {
    skip();
    if (pos_ >= s_.size()) fail("expected an argument", s_.size());
    const char c = s_[pos_];
    if (c == '[') {
      json v = vector();
      return {Expr::vector(std::move(v)), pos_};
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '.') {
      const double v = number();
      return {Expr::number(v), pos_};
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '{' || c == '@') {
      Expr e = parse_body();
      return {std::move(e), pos_};
    }
    fail("expected an argument", pos_ + 1);
  }

  std::vector<Arg> arg_list() {
    expect('(');
    std::vector<Arg> args;
    for (;;) {
      args.push_back(parse_arg());
      skip();
      if (pos_ < s_.size() && s_[pos_] == ',') {
        ++pos_;
        continue;
      }
      if (pos_ < s_.size() && s_[pos_] == ')') {
        ++pos_;
        return args;
      }
      fail("expected ',' or ')'", after_token());
    }
  }

  static ArgKind kind_of(const Expr& e) {
    if (e.kind == Expr::Kind::Number) return ArgKind::Number;
    if (e.kind == Expr::Kind::Vector) return ArgKind::Vector;
    return ArgKind::Body;
  }

  Expr parse_body() {
    skip();
    if (pos_ >= s_.size()) fail("expected an expression", s_.size());
    const char c = s_[pos_];
    if (c == '{') {
      json body = object_literal();
      return checked_primitive(std::move(body), pos_);
    }
    if (c == '@') {
      ++pos_;
      const std::size_t b = pos_;
      while (pos_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[pos_])) && s_[pos_] != ',' && s_[pos_] != ')') ++pos_;
      if (b == pos_) fail("expected a file path after '@'", after_token());
      return Expr::file(std::string(s_.substr(b, pos_ - b)));
    }
    if (!std::isalpha(static_cast<unsigned char>(c))) fail("expected an expression", pos_ + 1);
    const std::string name = ident();
    const std::size_t name_end = pos_;
    const auto& table = operator_table();
    const auto it = table.find(name);
    if (it == table.end() && !is_primitive_name(name)) fail("unknown operator '" + name + "'", name_end);
    std::vector<Arg> args = arg_list();
    const std::size_t close = pos_;
    if (it == table.end()) return primitive_call(name, args, close);

    const OpSignature& sig = it->second;
    std::vector<Expr> out;
    const std::size_t nfixed = sig.fixed.size();
    if (args.size() < nfixed + (sig.vector_tail ? 1 : 0) || (!sig.vector_tail && args.size() > nfixed))
      fail(name + ": wrong number of arguments", close);
    for (std::size_t k = 0; k < args.size(); ++k) {
      const ArgKind want = k < nfixed ? sig.fixed[k] : ArgKind::Vector;
      if (kind_of(args[k].expr) != want) fail(name + ": argument " + std::to_string(k + 1) + " has the wrong kind", args[k].end);
      out.push_back(std::move(args[k].expr));
    }
    return Expr::apply(name, std::move(out));
  }

  Expr primitive_call(const std::string& name, std::vector<Arg>& args, std::size_t close) {
    auto want = [&](std::size_t k, ArgKind kind) -> const Expr& {
      if (k >= args.size()) fail(name + ": missing argument " + std::to_string(k + 1), close);
      if (kind_of(args[k].expr) != kind) fail(name + ": argument " + std::to_string(k + 1) + " has the wrong kind", args[k].end);
      return args[k].expr;
    };
    auto at_most = [&](std::size_t n) {
      if (args.size() > n) fail(name + ": too many arguments", args[n].end);
    };
    json body;
    if (name == "ball") {
      body = {{"type", "ball"}, {"center", want(0, ArgKind::Vector).data}, {"radius", want(1, ArgKind::Number).data}};
      at_most(2);
    } else if (name == "segment") {
      body = {{"type", "segment"}, {"x", want(0, ArgKind::Vector).data}};
      at_most(1);
    } else if (name == "polytope") {
      json verts = json::array();
      const json& first = want(0, ArgKind::Vector).data;
      if (args.size() == 1 && !first.empty() && first[0].is_array())
        verts = first;
      else
        for (std::size_t k = 0; k < args.size(); ++k) verts.push_back(want(k, ArgKind::Vector).data);
      body = {{"type", "polytope"}, {"vertices", verts}};
    } else if (name == "ellipse") {
      body = {{"type", "ellipse"}, {"center", want(0, ArgKind::Vector).data}, {"a", want(1, ArgKind::Number).data},
              {"b", want(2, ArgKind::Number).data}, {"rot", args.size() > 3 ? want(3, ArgKind::Number).data : json(0.0)}};
      at_most(4);
    } else if (name == "ellipse_focal") {
      body = {{"type", "ellipse_focal"}, {"center", want(0, ArgKind::Vector).data}, {"ecc", want(1, ArgKind::Number).data}};
      at_most(2);
    } else {
      json rows = json::array();
      for (std::size_t k = 0; k < std::max<std::size_t>(args.size(), 1); ++k) {
        const json& r = want(k, ArgKind::Vector).data;
        if (r.size() < 2 || !r.back().is_number()) fail("hrep: each row is [normal..., bound]", args[k].end);
        json normal = json::array();
        for (std::size_t i = 0; i + 1 < r.size(); ++i) normal.push_back(r[i]);
        rows.push_back({{"normal", normal}, {"bound", r.back()}});
      }
      body = {{"type", "hrep"}, {"rows", rows}};
    }
    return checked_primitive(std::move(body), close);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Expr parse_expr(std::string_view text) { return detail::Parser(text).parse(); }

inline std::string print_expr(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Apply: {
      std::string s = e.op + "(";
      for (std::size_t k = 0; k < e.args.size(); ++k) {
        if (k) s += ",";
        s += print_expr(e.args[k]);
      }
      return s + ")";
    }
    case Expr::Kind::FileRef:
      return "@" + e.data.get<std::string>();
    default:
      return e.data.dump();
  }
}

// ---------------------------------------------------------------------------
// Evaluation

struct EvalConfig {
  int dim = 2;
  int grid = 4096;
  std::uint64_t seed = 0;
};

using Value = std::variant<Body, StarBody>;

class Evaluator {
 public:
  explicit Evaluator(EvalConfig cfg) : cfg_(cfg) {}

  const EvalConfig& config() const { return cfg_; }
  const std::vector<OperatorReport>& reports() const { return reports_; }

  // Grid used for values living in dimension d.
  SphereGrid grid_for(int d) {
    auto it = grids_.find(d);
    if (it != grids_.end()) return it->second;
    SphereGrid g = d == 1 ? SphereGrid::line() : make_grid(d, cfg_.grid, d == 2 ? 0 : cfg_.seed);
    grids_.emplace(d, g);
    return g;
  }

  Value eval(const Expr& e) {
    switch (e.kind) {
      case Expr::Kind::Primitive:
        return checked_dim(body_from_json(e.data));
      case Expr::Kind::FileRef:
        return checked_dim(body_from_json(read_json_file(e.data.get<std::string>())));
      case Expr::Kind::Apply:
        return apply(e);
      default:
        throw TypeMismatch("a number or vector is not a body expression");
    }
  }

  // Star bodies become convex bodies through their core.
  Body as_body(const Value& v) {
    if (auto* b = std::get_if<Body>(&v)) return *b;
    return core(std::get<StarBody>(v));
  }

  // Convex bodies become star bodies through their radial function.
  StarBody as_star(const Value& v) {
    if (auto* a = std::get_if<StarBody>(&v)) return *a;
    const Body& K = std::get<Body>(v);
    return sample_radial(K, grid_for(K.dim()));
  }

 private:
  static int dim_of(const Value& v) {
    return std::visit([](const auto& x) { return x.dim(); }, v);
  }

  Body checked_dim(Body K) const {
    if (K.dim() != cfg_.dim)
      throw std::invalid_argument("primitive of dimension " + std::to_string(K.dim()) + " under --dim " + std::to_string(cfg_.dim));
    return K;
  }

  static std::string describe_value(const Value& v) {
    return std::visit([](const auto& x) { return describe(x); }, v);
  }

  Value apply(const Expr& e) {
    std::vector<Value> in;
    for (const Expr& a : e.args)
      if (a.is_body_expr()) in.push_back(eval(a));
    Value out = dispatch(e, in);
    OperatorReport rep;
    rep.op = e.op;
    for (std::size_t k = 0; k < in.size(); ++k) rep.input += (k ? ", " : "") + describe_value(in[k]);
    rep.output = describe_value(out);
    rep.grid_size = grid_for(dim_of(out)).size();
    rep.defect = defect_of(e.op, in, out);
    reports_.push_back(std::move(rep));
    return out;
  }

  double defect_of(const std::string& op, const std::vector<Value>& in, const Value& out) {
    if (op == "core" && std::holds_alternative<StarBody>(in[0])) {
      const StarBody& A = std::get<StarBody>(in[0]);
      return sup_defect(flower(std::get<Body>(out), A.grid()).radial(), A.radial());
    }
    return 0.0;
  }

  Value dispatch(const Expr& e, const std::vector<Value>& in) {
    const std::string& op = e.op;
    if (op == "polar") {
      if (auto* A = std::get_if<StarBody>(&in[0])) return polar_star(*A);
      const Body& K = std::get<Body>(in[0]);
      return polar(K, grid_for(K.dim()));
    }
    if (op == "reciprocal") {
      const Body K = as_body(in[0]);
      return reciprocal(K, grid_for(K.dim()));
    }
    if (op == "flower") {
      const Body K = as_body(in[0]);
      return flower(K, grid_for(K.dim()));
    }
    if (op == "core") return core(as_star(in[0]));
    if (op == "phi") return phi(as_star(in[0]));
    if (op == "conv") return star_conv(as_star(in[0]));
    if (op == "inns") {
      if (auto* K = std::get_if<Body>(&in[0])) return inner_hull(*K, grid_for(K->dim()));
      return phi(star_conv(phi(std::get<StarBody>(in[0]))));
    }
    if (op == "minkowski") return minkowski(as_body(in[0]), as_body(in[1]));
    if (op == "radialsum") return radial_sum(as_star(in[0]), as_star(in[1]));
    if (op == "oplus") {
      const Body K = as_body(in[0]), T = as_body(in[1]);
      return oplus(K, T, grid_for(K.dim()));
    }
    if (op == "scale") {
      const double lambda = e.args[1].data.get<double>();
      if (auto* K = std::get_if<Body>(&in[0])) return scale(*K, lambda);
      if (!(lambda >= 0.0)) throw std::invalid_argument("scale: factor must be >= 0");
      const StarBody& A = std::get<StarBody>(in[0]);
      std::vector<double> r = A.radial();
      for (double& x : r) x = lambda == 0.0 ? 0.0 : lambda * x;
      return StarBody(A.grid(), std::move(r));
    }
    if (op == "project") {
      const int n = dim_of(in[0]);
      std::vector<Vec> basis;
      for (std::size_t k = 1; k < e.args.size(); ++k) {
        Vec v;
        for (const auto& x : e.args[k].data) {
          if (!x.is_number()) throw std::invalid_argument("project: basis vectors must be flat");
          v.push_back(x.get<double>());
        }
        if (static_cast<int>(v.size()) != n) throw std::invalid_argument("project: basis vector dimension mismatch");
        basis.push_back(std::move(v));
      }
      const Subspace E = orthonormal_subspace(n, basis);
      if (auto* K = std::get_if<Body>(&in[0])) return project(*K, E);
      return project(std::get<StarBody>(in[0]), E, grid_for(E.dim()));
    }
    throw TypeMismatch("unknown operator '" + op + "'");
  }

  EvalConfig cfg_;
  std::map<int, SphereGrid> grids_;
  std::vector<OperatorReport> reports_;
};

}  // namespace flowerkit
