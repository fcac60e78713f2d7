// flowerkit command-line interface.
//
// Exit codes: 0 success, 1 numeric-domain error, 2 parse or configuration
// error, 3 a check suite ran and some record failed.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "flowerkit/flowerkit.hpp"

using namespace flowerkit;

namespace {

struct RunConfig {
  int dim = 2;
  int grid = 4096;
  std::uint64_t seed = 0;
  std::optional<double> tol;
  std::string out;
  std::string fleet = "default";
  std::string config_file;
};

json config_json(const RunConfig& c) {
  return {{"dim", c.dim}, {"grid", c.grid}, {"seed", c.seed}, {"tol", c.tol ? json(*c.tol) : json(nullptr)},
          {"out", c.out}, {"fleet", c.fleet}};
}

void load_config_file(RunConfig& c) {
  if (c.config_file.empty()) return;
  const json j = read_json_file(c.config_file);
  if (!j.is_object()) throw std::invalid_argument("config file must hold a JSON object");
  for (const auto& [k, v] : j.items()) {
    if (k == "dim") c.dim = v.get<int>();
    else if (k == "grid") c.grid = v.get<int>();
    else if (k == "seed") c.seed = v.get<std::uint64_t>();
    else if (k == "tol") c.tol = v.get<double>();
    else if (k == "out") c.out = v.get<std::string>();
    else if (k == "fleet") c.fleet = v.get<std::string>();
    else throw std::invalid_argument("config file: unknown key '" + k + "'");
  }
}

json record(const std::string& name, const json& value, std::optional<double> tol = std::nullopt, bool pass = true) {
  return {{"name", name}, {"value", value}, {"tolerance", tol ? json(*tol) : json(nullptr)}, {"pass", pass}};
}

json ext_list(const std::vector<double>& v) {
  json a = json::array();
  for (double x : v) a.push_back(ext_to_json(x));
  return a;
}

void emit(const json& doc, const RunConfig& c, bool to_file) {
  const std::string text = doc.dump(2) + "\n";
  if (to_file && !c.out.empty()) {
    std::ofstream f(c.out, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot write '" + c.out + "'");
    f << text;
  } else {
    std::cout << text;
  }
}

json base_doc(const std::string& command, const RunConfig& c) {
  return {{"command", command}, {"config", config_json(c)}, {"results", json::array()}};
}

std::vector<FleetMember> fleet_for(const RunConfig& c) {
  if (c.fleet != "default") throw std::invalid_argument("unknown fleet '" + c.fleet + "'");
  if (c.dim != 2) throw std::invalid_argument("the default fleet is planar; use --dim 2");
  return default_fleet();
}

// Body arguments: a JSON file path when it exists as a file, an expression
// otherwise.
Value eval_arg(Evaluator& ev, const std::string& text) {
  std::ifstream probe(text);
  if (probe.good() && text.find('(') == std::string::npos) return ev.eval(Expr::file(text));
  return ev.eval(parse_expr(text));
}

json summarize(Evaluator& ev, const Value& v, json& results) {
  if (const Body* K = std::get_if<Body>(&v)) {
    const SphereGrid g = ev.grid_for(K->dim());
    const auto h = support_samples(*K, g);
    results.push_back(record("support_min", ext_to_json(*std::min_element(h.begin(), h.end()))));
    results.push_back(record("support_max", ext_to_json(*std::max_element(h.begin(), h.end()))));
    return body_to_json(*K);
  }
  const StarBody& A = std::get<StarBody>(v);
  results.push_back(record("radial_min", ext_to_json(*std::min_element(A.radial().begin(), A.radial().end()))));
  results.push_back(record("radial_max", ext_to_json(*std::max_element(A.radial().begin(), A.radial().end()))));
  return nullptr;
}

int run_eval(const RunConfig& c, const std::string& text, bool print_radial) {
  Evaluator ev({c.dim, c.grid, c.seed});
  const Expr e = parse_expr(text);
  const Value v = ev.eval(e);
  json doc = base_doc("eval", c);
  doc["expression"] = print_expr(e);
  doc["kind"] = std::holds_alternative<Body>(v) ? std::get<Body>(v).kind() : std::string("star");
  const json body = summarize(ev, v, doc["results"]);
  if (!body.is_null()) doc["body"] = body;
  json reps = json::array();
  for (const auto& r : ev.reports())
    reps.push_back({{"op", r.op}, {"input", r.input}, {"output", r.output}, {"grid", r.grid_size}, {"defect", r.defect}});
  doc["reports"] = reps;
  if (print_radial) doc["radial"] = ext_list(ev.as_star(v).radial());
  emit(doc, c, true);
  return 0;
}

int run_check(const RunConfig& c, std::vector<std::string> suites) {
  const auto fleet = fleet_for(c);
  const SphereGrid g = make_grid(c.dim, c.grid, c.seed);
  if (suites.size() == 1 && suites[0] == "all") suites = suite_names();
  json doc = base_doc("check", c);
  bool ok = true;
  for (const auto& s : suites) {
    for (auto r : run_suite(s, fleet, g)) {
      if (c.tol && s == "identities") r = at_most(r.name, r.value, *c.tol);
      ok = ok && r.pass;
      doc["results"].push_back(record(s + "." + r.name, ext_to_json(r.value), r.tolerance, r.pass));
    }
  }
  doc["all_pass"] = ok;
  emit(doc, c, true);
  return ok ? 0 : 3;
}

int run_volume(const RunConfig& c, const std::vector<std::string>& exprs) {
  Evaluator ev({c.dim, c.grid, c.seed});
  json doc = base_doc("volume", c);
  for (const auto& text : exprs) {
    const Value v = eval_arg(ev, text);
    if (const Body* K = std::get_if<Body>(&v)) {
      doc["results"].push_back(record(text + ":flower_volume", flower_volume(*K, ev.grid_for(K->dim()))));
      if (K->dim() == 2) {
        try {
          doc["results"].push_back(record(text + ":area", area(*K)));
        } catch (const UnsupportedRepresentation&) {
        }
      }
    } else {
      doc["results"].push_back(record(text + ":volume", star_volume(std::get<StarBody>(v))));
    }
  }
  emit(doc, c, true);
  return 0;
}

int run_mixed(const RunConfig& c, const std::vector<std::string>& inputs) {
  Evaluator ev({c.dim, c.grid, c.seed});
  std::vector<Body> bodies;
  for (const auto& text : inputs) bodies.push_back(ev.as_body(eval_arg(ev, text)));
  if (static_cast<int>(bodies.size()) != c.dim)
    throw std::invalid_argument("mixed: need exactly --dim bodies, got " + std::to_string(bodies.size()));
  json doc = base_doc("mixed", c);
  doc["results"].push_back(record("V_flower", flower_mixed_volume(bodies, ev.grid_for(c.dim))));
  if (c.dim == 2) {
    try {
      doc["results"].push_back(record("V_classical", classical_mixed_area_2d(bodies[0], bodies[1])));
    } catch (const UnsupportedRepresentation&) {
    }
  }
  emit(doc, c, true);
  return 0;
}

int run_quermass(const RunConfig& c, const std::string& text, int index, int mc) {
  Evaluator ev({c.dim, c.grid, c.seed});
  const Body K = ev.as_body(eval_arg(ev, text));
  const SphereGrid g = ev.grid_for(K.dim());
  json doc = base_doc("quermass", c);
  const double w = quermass_flower(K, index, g);
  doc["results"].push_back(record("W_flower_" + std::to_string(index), w));
  if (K.dim() == 2) {
    try {
      doc["results"].push_back(record("W_classical_" + std::to_string(index), quermass_classical_2d(K, index, g)));
    } catch (const UnsupportedRepresentation&) {
    }
  }
  if (mc > 0) {
    const int i = K.dim() - index;
    const McEstimate est = quermass_kubota_mc(K, i, mc, c.seed);
    const double band = 3.0 * est.std_error + 1e-12 * std::abs(w);
    doc["results"].push_back(record("W_flower_" + std::to_string(index) + "_kubota_mc", est.estimate, band,
                                    std::abs(est.estimate - w) <= band));
    doc["results"].push_back(record("kubota_mc_std_error", est.std_error));
  }
  emit(doc, c, true);
  return 0;
}

int run_distance(const RunConfig& c, const std::string& a, const std::string& b) {
  Evaluator ev({c.dim, c.grid, c.seed});
  const StarBody A = ev.as_star(eval_arg(ev, a));
  const StarBody B = ev.as_star(eval_arg(ev, b));
  json doc = base_doc("distance", c);
  doc["results"].push_back(record("distance", geometric_distance(A, B)));
  emit(doc, c, true);
  return 0;
}

int run_render(const RunConfig& c, int figure, const std::vector<std::string>& exprs, const std::string& companion) {
  if (c.out.empty()) throw std::invalid_argument("render: --out is required");
  if (c.dim != 2) throw UnsupportedRepresentation("render: planar shapes only (--dim 2)");
  Evaluator ev({c.dim, c.grid, c.seed});
  const SphereGrid g = ev.grid_for(2);
  std::vector<Panel> panels;
  if (figure) {
    panels = figure_panels(figure, g);
  } else {
    for (const auto& text : exprs) {
      const Value v = eval_arg(ev, text);
      Panel p;
      const StarBody A = ev.as_star(v);
      p.shapes.push_back(shape_of(A, false));
      if (companion != "none") {
        const Body K = ev.as_body(v);
        if (companion == "reciprocal")
          p.shapes.push_back(shape_of(reciprocal(K, g), g, true, "#1f4e9c"));
        else if (companion == "flower")
          p.shapes.push_back(shape_of(flower(K, g), true, "#9c1f1f"));
        else
          throw std::invalid_argument("render: companion must be none, reciprocal or flower");
      }
      panels.push_back(std::move(p));
    }
  }
  write_svg(panels, c.out);
  json doc = base_doc("render", c);
  std::size_t paths = 0;
  for (const auto& p : panels)
    for (const auto& s : p.shapes) paths += s.boundary.empty() ? 0 : 1;
  doc["results"].push_back(record("panels", panels.size()));
  doc["results"].push_back(record("paths", paths));
  emit(doc, c, false);
  return 0;
}

void add_common(CLI::App* sub, RunConfig& c) {
  sub->add_option("--dim", c.dim, "ambient dimension")->check(CLI::Range(1, 64));
  sub->add_option("--grid", c.grid, "sphere grid size M")->check(CLI::Range(8, 10000000));
  sub->add_option("--seed", c.seed, "seed for grids and Monte-Carlo");
  sub->add_option("--tol", c.tol, "tolerance override");
  sub->add_option("--out", c.out, "output path");
  sub->add_option("--fleet", c.fleet, "test fleet name");
  sub->add_option("--config", c.config_file, "JSON run configuration (flags are applied after it)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"flowerkit: reciprocals, flowers and their functionals"};
  app.require_subcommand(1);
  RunConfig cfg;

  std::string expr_text;
  bool print_radial = false;
  auto* eval = app.add_subcommand("eval", "evaluate a body expression");
  eval->add_option("expr", expr_text, "expression")->required();
  eval->add_flag("--print-radial", print_radial, "list radial samples of the result");
  add_common(eval, cfg);

  std::vector<std::string> suites;
  auto* check = app.add_subcommand("check", "run named check suites over a fleet");
  check->add_option("suites", suites, "identities | classification | flowers | inequalities | all")->required();
  add_common(check, cfg);

  std::vector<std::string> exprs;
  auto* volume = app.add_subcommand("volume", "flower volumes of bodies, volumes of star bodies");
  volume->add_option("exprs", exprs, "expressions or JSON files")->required();
  add_common(volume, cfg);

  std::vector<std::string> bodies;
  auto* mixed = app.add_subcommand("mixed", "flower mixed volume V♣(K1, ..., Kn)");
  mixed->add_option("--bodies", bodies, "expressions or JSON files")->required();
  add_common(mixed, cfg);

  int index = 0, mc = 0;
  auto* quermass = app.add_subcommand("quermass", "flower quermassintegral W♣_i");
  quermass->add_option("expr", expr_text, "expression or JSON file")->required();
  quermass->add_option("--index", index, "i")->required();
  quermass->add_option("--mc", mc, "Kubota Monte-Carlo samples (0 = off)");
  add_common(quermass, cfg);

  std::vector<std::string> pair;
  auto* distance = app.add_subcommand("distance", "geometric distance of two star bodies");
  distance->add_option("exprs", pair, "two expressions or JSON files")->required()->expected(2);
  add_common(distance, cfg);

  int figure = 0;
  std::string companion = "none";
  auto* render = app.add_subcommand("render", "SVG rendering");
  render->add_option("--figure", figure, "1: reciprocals, 2: flowers")->check(CLI::IsMember({1, 2}));
  render->add_option("exprs", exprs, "expressions or JSON files");
  render->add_option("--with", companion, "dashed companion: none | reciprocal | flower");
  add_common(render, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (!cfg.config_file.empty()) {
      RunConfig flags = cfg;
      load_config_file(cfg);
      // Explicit flags win over the file.
      for (auto* sub : app.get_subcommands()) {
        if (sub->count("--dim")) cfg.dim = flags.dim;
        if (sub->count("--grid")) cfg.grid = flags.grid;
        if (sub->count("--seed")) cfg.seed = flags.seed;
        if (sub->count("--tol")) cfg.tol = flags.tol;
        if (sub->count("--out")) cfg.out = flags.out;
        if (sub->count("--fleet")) cfg.fleet = flags.fleet;
      }
      if (cfg.dim < 1 || cfg.grid < 8) throw std::invalid_argument("config: need dim >= 1 and grid >= 8");
    }
    if (*eval) return run_eval(cfg, expr_text, print_radial);
    if (*check) return run_check(cfg, suites);
    if (*volume) return run_volume(cfg, exprs);
    if (*mixed) return run_mixed(cfg, bodies);
    if (*quermass) return run_quermass(cfg, expr_text, index, mc);
    if (*distance) return run_distance(cfg, pair[0], pair[1]);
    if (*render) {
      if (!figure && exprs.empty() && cfg.out.empty()) throw std::invalid_argument("render: nothing to do");
      return run_render(cfg, figure, exprs, companion);
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const GeometryError& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
