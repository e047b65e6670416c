#include "salg/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "salg/dsl.hpp"
#include "salg/hcgroup.hpp"
#include "salg/orbits.hpp"
#include "salg/sdim.hpp"
#include "salg/selftest.hpp"

namespace salg {

namespace {

using Json = nlohmann::ordered_json;

/// What a command produced; printed as text or as the JSON envelope.
struct Outcome {
  int code = 0;
  std::string text;
  Json inputs = Json::object();
  Json result;
  Json certificate;  // omitted when null
};

struct Globals {
  bool json = false;
  std::vector<std::string> field{"q"};
  std::uint64_t seed = 1;

  Field make_field() const {
    if (field.size() == 1 && field[0] == "q") return Field{};
    if (field.size() == 2 && field[0] == "fp") {
      unsigned long p = 0;
      try {
        p = std::stoul(field[1]);
      } catch (const std::exception&) {
        throw std::invalid_argument("--field fp needs a prime, got '" + field[1] + "'");
      }
      return Field::prime(p);
    }
    throw std::invalid_argument("--field must be 'q' or 'fp <p>'");
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string join(const std::vector<SuperPoly>& ps, const std::string& sep = ", ") {
  std::string out;
  for (const auto& p : ps) out += (out.empty() ? "" : sep) + p.str();
  return out;
}

Json strs(const std::vector<SuperPoly>& ps) {
  Json out = Json::array();
  for (const auto& p : ps) out.push_back(p.str());
  return out;
}

Json dim_json(const SuperDim& d) {
  Json out;
  out["even"] = d.even == kEmptyDim ? Json(nullptr) : Json(d.even);
  out["odd"] = d.odd;
  return out;
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

/// Comma-separated odd elements in the algebra's ring.
std::vector<SuperPoly> parse_sequence(const std::string& text, const SuperAlgebra& a) {
  std::vector<SuperPoly> out;
  for (auto& p : parse_poly_list(text, a.ring())) out.push_back(a.normal_form(p));
  return out;
}

Json certificate_json(const OddParamCertificate& c) {
  Json out;
  out["elements"] = strs(c.elements);
  out["annihilator"] = c.annihilator ? strs(c.annihilator->minimal_generators()) : Json(nullptr);
  out["even_dim_witness"] = c.even_dim_witness == kEmptyDim ? Json(nullptr) : Json(c.even_dim_witness);
  return out;
}

std::string witness_text(int d) { return d == kEmptyDim ? "-inf" : std::to_string(d); }

// --- algebra commands -------------------------------------------------------

struct AlgebraArgs {
  std::string file;
  std::string extra;
  unsigned random = 2;
  std::string elem;
  std::string seq;
  std::string point;
  std::string at;
};

Outcome cmd_ksdim(const AlgebraArgs& args, const Globals& g) {
  const SuperAlgebra a = parse_algebra(read_file(args.file), g.make_field()).algebra();
  KsdimOptions opts;
  opts.seed = g.seed;
  opts.random_candidates = args.random;
  if (!args.extra.empty()) opts.extra_candidates = parse_sequence(args.extra, a);
  const KsdimResult r = ksdim(a, opts);
  Outcome o;
  o.inputs["file"] = args.file;
  if (!args.extra.empty()) o.inputs["extra"] = args.extra;
  o.inputs["random"] = args.random;
  o.result = dim_json(r.dim);
  o.certificate = certificate_json(r.certificate);
  o.text = "Ksdim = " + r.dim.str() + "\n";
  if (!r.certificate.elements.empty()) {
    o.text += "odd parameters: " + join(r.certificate.elements) + "\n";
    o.text += "Kdim(A_0/Ann) = " + witness_text(r.certificate.even_dim_witness) + "\n";
  }
  return o;
}

Outcome render_algebra(const std::string& name, const SuperAlgebra& a) {
  Outcome o;
  AlgebraDoc doc{name, a.ring(), a.relations(), std::nullopt, {}};
  o.text = render_manifest(Manifest{doc, {}});
  o.result["even"] = a.ring()->even_names();
  o.result["odd"] = a.ring()->odd_names();
  o.result["relations"] = strs(a.relations());
  return o;
}

Outcome cmd_bar(const AlgebraArgs& args, const Globals& g) {
  const AlgebraDoc doc = parse_algebra(read_file(args.file), g.make_field());
  Outcome o = render_algebra(doc.name + "_bar", bar(doc.algebra()));
  o.inputs["file"] = args.file;
  return o;
}

Outcome cmd_gr(const AlgebraArgs& args, const Globals& g) {
  const AlgebraDoc doc = parse_algebra(read_file(args.file), g.make_field());
  const SuperAlgebra gr = gr_presentation(doc.algebra());
  Outcome o = render_algebra(doc.name + "_gr", gr);
  o.inputs["file"] = args.file;
  o.result["homogeneous"] = is_odd_weight_homogeneous(gr);
  return o;
}

Outcome cmd_ann(const AlgebraArgs& args, const Globals& g) {
  const SuperAlgebra a = parse_algebra(read_file(args.file), g.make_field()).algebra();
  const SuperPoly p = a.normal_form(parse_poly(args.elem, a.ring()));
  const Annihilator ann = annihilator(p, a);
  const auto gens = ann.ideal.minimal_generators();
  Outcome o;
  o.inputs["file"] = args.file;
  o.inputs["elem"] = args.elem;
  o.result["generators"] = strs(gens);
  o.result["unit"] = ann.of_zero;
  o.text = "Ann(" + p.str() + ") = (" + (ann.of_zero ? std::string("1") : join(gens)) + ")\n";
  return o;
}

Outcome cmd_odd_params(const AlgebraArgs& args, const Globals& g) {
  const SuperAlgebra a = parse_algebra(read_file(args.file), g.make_field()).algebra();
  const OddParamCheck c = is_odd_parameter_system(a, parse_sequence(args.seq, a));
  Outcome o;
  o.inputs["file"] = args.file;
  o.inputs["seq"] = args.seq;
  o.result = c.is_system;
  o.certificate = certificate_json(c.certificate);
  o.code = c.is_system ? 0 : kExitFalse;
  o.text = bool_text(c.is_system) + "\nKdim(A_0/Ann) = " + witness_text(c.certificate.even_dim_witness) +
           ", Kdim(A_0) = " + witness_text(krull_dim_even(a)) + "\n";
  return o;
}

Outcome cmd_odd_regular(const AlgebraArgs& args, const Globals& g) {
  const SuperAlgebra a = parse_algebra(read_file(args.file), g.make_field()).algebra();
  const bool r = is_odd_regular_sequence(a, parse_sequence(args.seq, a));
  Outcome o;
  o.inputs["file"] = args.file;
  o.inputs["seq"] = args.seq;
  o.result = r;
  o.code = r ? 0 : kExitFalse;
  o.text = bool_text(r) + "\n";
  return o;
}

/// --point if given, else the document's first point, else the empty point
/// when there are no even generators.
PointIdeal choose_point(const std::string& text, const AlgebraDoc& doc, const Field& f) {
  if (!text.empty()) return parse_point(text, f);
  if (!doc.points.empty()) return doc.points.front();
  if (doc.ring->num_even() == 0) return PointIdeal{};
  throw std::invalid_argument("no point given: pass --point or add a `point` line");
}

Outcome cmd_phi_dim(const AlgebraArgs& args, const Globals& g) {
  const AlgebraDoc doc = parse_algebra(read_file(args.file), g.make_field());
  const SuperAlgebra a = doc.algebra();
  const PointIdeal pt = choose_point(args.point, doc, g.make_field());
  const auto basis = phi_basis_at_point(a, pt);
  const bool regular = check_oddly_regular_at_point(a, pt);
  Outcome o;
  o.inputs["file"] = args.file;
  o.inputs["point"] = render_point(pt);
  o.result["dim"] = basis.size();
  o.result["basis"] = strs(basis);
  o.result["oddly_regular"] = regular;
  o.text = "dim Phi = " + std::to_string(basis.size()) + "\nbasis: " + join(basis) +
           "\noddly regular: " + bool_text(regular) + "\n";
  return o;
}

Outcome cmd_localize(const AlgebraArgs& args, const Globals& g) {
  const AlgebraDoc doc = parse_algebra(read_file(args.file), g.make_field());
  const SuperAlgebra a = doc.algebra();
  const Localization loc = localize_at_even(a, parse_poly(args.at, a.ring()));
  Outcome o;
  if (loc.zero_ring) {
    o.text = "zero ring\n";
    o.result["zero_ring"] = true;
  } else {
    o = render_algebra(doc.name + "_loc", loc.algebra);
    o.result["zero_ring"] = false;
    o.result["inverse"] = loc.inverse_name;
  }
  o.inputs["file"] = args.file;
  o.inputs["at"] = args.at;
  return o;
}

struct MonoArgs {
  std::string source;
  std::string target;
  std::string map;
};

Outcome cmd_mono_check(const MonoArgs& args, const Globals& g) {
  const SuperAlgebra src = parse_algebra(read_file(args.source), g.make_field()).algebra();
  const SuperAlgebra dst = parse_algebra(read_file(args.target), g.make_field()).algebra();
  const SuperMorphism phi{src, dst, parse_images(args.map, src.ring(), dst.ring())};
  check_morphism(phi);
  const bool r = check_mono_necessary(phi);
  Outcome o;
  o.inputs["source"] = args.source;
  o.inputs["target"] = args.target;
  o.inputs["map"] = args.map;
  o.result = r;
  o.code = r ? 0 : kExitFalse;
  o.text = bool_text(r) + "\n";
  return o;
}

// --- Harish-Chandra pairs ---------------------------------------------------

struct PairArgs {
  std::string file;
  std::string builtin;
  std::string coeff;
  std::string lhs;
  std::string rhs;
  std::string strategy = "leftmost";
  bool show_gr = false;
};

HCPair load_pair(const PairArgs& args, const Globals& g, Json& inputs) {
  if (args.file.empty() == args.builtin.empty()) {
    throw std::invalid_argument("give exactly one of a pair file or --builtin");
  }
  if (!args.builtin.empty()) {
    inputs["builtin"] = args.builtin;
    return builtin_pair(args.builtin, g.make_field());
  }
  inputs["file"] = args.file;
  return parse_pair(read_file(args.file), g.make_field());
}

SuperAlgebra load_coefficients(const PairArgs& args, const Globals& g, Json& inputs) {
  if (args.coeff.empty()) {
    inputs["coeff"] = "Lambda(s,t,u,w)";
    return parse_algebra("superalgebra C odd s t u w end", g.make_field()).algebra();
  }
  inputs["coeff"] = args.coeff;
  return parse_algebra(read_file(args.coeff), g.make_field()).algebra();
}

Json element_json(const HCGroup& grp, const HCElement& e) {
  Json out;
  Json rows = Json::array();
  for (const auto& row : e.g) rows.push_back(strs(row));
  out["g"] = rows;
  out["e"] = strs(e.odd);
  out["text"] = grp.render(e);
  return out;
}

Outcome cmd_hc_validate(const PairArgs& args, const Globals& g) {
  Outcome o;
  const CheckReport rep = validate_hc_pair(load_pair(args, g, o.inputs));
  Json checks = Json::array();
  for (const auto& c : rep.checks) {
    checks.push_back(Json{{"axiom", c.axiom}, {"ok", c.ok}, {"witness", c.witness}});
    o.text += std::string(c.ok ? "ok    " : "FAIL  ") + c.axiom + (c.witness.empty() ? "" : ": " + c.witness) + "\n";
  }
  o.result["valid"] = rep.valid();
  o.result["checks"] = checks;
  o.text += std::string("valid: ") + bool_text(rep.valid()) + "\n";
  o.code = rep.valid() ? 0 : kExitFalse;
  return o;
}

RewriteStrategy parse_strategy(const std::string& s) {
  if (s == "leftmost") return RewriteStrategy::Leftmost;
  if (s == "rightmost") return RewriteStrategy::Rightmost;
  throw std::invalid_argument("--strategy must be leftmost or rightmost");
}

Outcome cmd_hc_mul(const PairArgs& args, const Globals& g, bool inverse) {
  Outcome o;
  HCPair pair = load_pair(args, g, o.inputs);
  const HCGroup grp(std::move(pair), load_coefficients(args, g, o.inputs));
  o.inputs["lhs"] = args.lhs;
  if (!inverse) o.inputs["rhs"] = args.rhs;
  o.inputs["strategy"] = args.strategy;
  const HCElement x = parse_hc_element(args.lhs, grp);
  RewriteStats stats;
  HCElement r;
  if (inverse) {
    r = grp.inv(x, parse_strategy(args.strategy), &stats);
  } else {
    r = grp.mul(x, parse_hc_element(args.rhs, grp), parse_strategy(args.strategy), &stats);
  }
  o.result = element_json(grp, r);
  o.certificate = Json{{"steps", stats.steps}, {"corrections", stats.corrections}};
  o.text = grp.render(r) + "\n";
  return o;
}

Outcome cmd_hc_sdim(const PairArgs& args, const Globals& g) {
  Outcome o;
  const SuperDim d = sdim_of_pair(load_pair(args, g, o.inputs));
  o.result = dim_json(d);
  o.text = "sdim = " + d.str() + "\n";
  return o;
}

Outcome cmd_hc_graded(const PairArgs& args, const Globals& g) {
  Outcome o;
  const HCPair p = load_pair(args, g, o.inputs);
  const bool graded = is_graded_pair(p);
  o.result = graded;
  o.code = graded ? 0 : kExitFalse;
  o.text = bool_text(graded) + "\n";
  if (args.show_gr) {
    const HCPair gr = gr_pair(p);
    const std::string doc = render_manifest(Manifest{PairDoc{gr}, {}});
    o.certificate = Json{{"gr", doc}};
    o.text += doc;
  }
  return o;
}

// --- orbits -----------------------------------------------------------------

struct OrbitArgs {
  std::string file;
  std::string derivation;
  std::vector<std::string> points;
  int pivot = -1;
};

OddAction load_action(const OrbitArgs& args, const Globals& g, AlgebraDoc& doc, Json& inputs) {
  doc = parse_algebra(read_file(args.file), g.make_field());
  inputs["file"] = args.file;
  GeneratorImages phi;
  if (!args.derivation.empty()) {
    inputs["derivation"] = args.derivation;
    phi = parse_images(args.derivation, doc.ring, doc.ring);
  } else if (doc.derivation) {
    phi = doc.derivation->generator_images(doc.ring);
  } else {
    throw std::invalid_argument("no derivation given: pass --derivation or add a `derivation` block");
  }
  OddAction act{doc.algebra(), std::move(phi)};
  const CheckReport rep = validate_action(act);
  for (const auto& c : rep.checks) {
    if (!c.ok) throw std::invalid_argument("not an action: " + c.axiom + " fails (" + c.witness + ")");
  }
  return act;
}

std::vector<PointIdeal> orbit_points(const OrbitArgs& args, const AlgebraDoc& doc, const Field& f) {
  std::vector<PointIdeal> pts;
  for (const auto& p : args.points) pts.push_back(parse_point(p, f));
  if (pts.empty()) pts = doc.points;
  if (pts.empty() && doc.ring->num_even() == 0) pts.push_back(PointIdeal{});
  if (pts.empty()) throw std::invalid_argument("no point given: pass --point or add a `point` line");
  return pts;
}

std::string orbit_line(const OrbitResult& r) {
  const auto gens = r.ideal.minimal_generators();
  std::string line = "I = (" + (gens.empty() ? std::string("0") : join(gens)) + "), ";
  if (r.stabilizer == Stabilizer::Full) {
    line += "orbit is a point";
  } else {
    line += "orbit ≅ Λ(" + r.odd_generators[*r.pivot].str() + ")";
  }
  return line + ", sdim " + r.sdim.str() + ", stabilizer " + to_string(r.stabilizer);
}

Json orbit_json(const OrbitResult& r, const PointIdeal& pt) {
  Json out;
  out["point"] = render_point(pt);
  out["ideal"] = strs(r.ideal.minimal_generators());
  out["stabilizer"] = to_string(r.stabilizer);
  out["sdim"] = dim_json(r.sdim);
  Json lambdas = Json::array();
  for (const auto& l : r.lambdas) lambdas.push_back(l.str());
  out["odd_generators"] = strs(r.odd_generators);
  out["lambdas"] = lambdas;
  out["pivot"] = r.pivot ? Json(*r.pivot) : Json(nullptr);
  return out;
}

Outcome cmd_orbit(const OrbitArgs& args, const Globals& g) {
  Outcome o;
  AlgebraDoc doc;
  const OddAction act = load_action(args, g, doc, o.inputs);
  const auto pts = orbit_points(args, doc, g.make_field());
  if (args.points.size() > 1) throw std::invalid_argument("orbit takes a single --point");
  const PointIdeal& pt = pts.front();
  o.inputs["point"] = render_point(pt);
  std::optional<std::size_t> pivot;
  if (args.pivot >= 0) {
    pivot = static_cast<std::size_t>(args.pivot);
    o.inputs["pivot"] = args.pivot;
  }
  const OrbitResult r = orbit_ideal(act, pt, pivot);
  o.result = orbit_json(r, pt);
  o.text = orbit_line(r) + "\n";
  return o;
}

Outcome cmd_verify_orbits(const OrbitArgs& args, const Globals& g) {
  Outcome o;
  AlgebraDoc doc;
  const OddAction act = load_action(args, g, doc, o.inputs);
  const auto pts = orbit_points(args, doc, g.make_field());
  Json points = Json::array();
  for (const auto& p : pts) points.push_back(render_point(p));
  o.inputs["points"] = points;
  bool all = true;
  Json out = Json::array();
  for (const auto& v : verify_orbit_theorems(act, pts)) {
    Json entry = orbit_json(v.orbit, v.point);
    Json checks = Json::array();
    o.text += "at " + render_point(v.point) + ": " + orbit_line(v.orbit) + "\n";
    for (const auto& c : v.report.checks) {
      all = all && c.ok;
      checks.push_back(Json{{"axiom", c.axiom}, {"ok", c.ok}, {"witness", c.witness}});
      o.text += std::string(c.ok ? "  ok    " : "  FAIL  ") + c.axiom + (c.witness.empty() ? "" : ": " + c.witness) + "\n";
    }
    entry["checks"] = checks;
    out.push_back(entry);
  }
  o.result["all_hold"] = all;
  o.result["points"] = out;
  o.code = all ? 0 : kExitFalse;
  return o;
}

// --- selftest ---------------------------------------------------------------

Outcome cmd_selftest(const std::vector<int>& only, const Globals& g) {
  Outcome o;
  o.inputs["seed"] = g.seed;
  if (!only.empty()) o.inputs["only"] = only;
  bool all = true;
  Json criteria = Json::array();
  for (const auto& r : run_selftest(g.seed, only)) {
    all = all && r.ok;
    criteria.push_back(Json{{"id", r.id}, {"title", r.title}, {"ok", r.ok}, {"details", r.details}});
    o.text += "criterion " + std::to_string(r.id) + ": " + (r.ok ? "PASS" : "FAIL") + "  " + r.title + "\n";
    for (const auto& d : r.details) o.text += "    " + d + "\n";
  }
  o.result["passed"] = all;
  o.result["criteria"] = criteria;
  o.code = all ? 0 : kExitFalse;
  return o;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Computations with finitely generated supercommutative superalgebras", "salg"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--json", g.json, "Emit {command, inputs, result, certificate} as JSON");
  app.add_option("--field", g.field, "Scalar field: q (rationals) or fp <p>")->expected(1, 2);
  app.add_option("--seed", g.seed, "Seed for randomized searches");

  AlgebraArgs aa;
  auto algebra_cmd = [&](const std::string& name, const std::string& help) {
    CLI::App* c = app.add_subcommand(name, help);
    c->add_option("file", aa.file, ".salg document")->required();
    return c;
  };
  CLI::App* ksdim_c = algebra_cmd("ksdim", "Krull super-dimension with a certificate");
  ksdim_c->add_option("--extra", aa.extra, "Extra odd candidates, comma separated");
  ksdim_c->add_option("--random", aa.random, "Number of random odd combinations to try");
  CLI::App* bar_c = algebra_cmd("bar", "A modulo the ideal generated by odd elements");
  CLI::App* gr_c = algebra_cmd("gr", "Associated graded presentation for the odd filtration");
  CLI::App* ann_c = algebra_cmd("ann", "Annihilator of an element");
  ann_c->add_option("--elem", aa.elem, "Element")->required();
  CLI::App* params_c = algebra_cmd("odd-params", "Is the sequence a system of odd parameters?");
  params_c->add_option("--seq", aa.seq, "Odd elements, comma separated")->required();
  CLI::App* regular_c = algebra_cmd("odd-regular", "Is the sequence odd regular?");
  regular_c->add_option("--seq", aa.seq, "Odd elements, comma separated")->required();
  CLI::App* phi_c = algebra_cmd("phi-dim", "Dimension of A_1 / m A_1 at a rational point");
  phi_c->add_option("--point", aa.point, "Point, e.g. \"x = 1, z = -2/3\"");
  CLI::App* loc_c = algebra_cmd("localize", "Localization at an even element");
  loc_c->add_option("--at", aa.at, "Even element to invert")->required();

  MonoArgs ma;
  CLI::App* mono_c = app.add_subcommand("mono-check", "Necessary condition for a monomorphism");
  mono_c->add_option("source", ma.source, "Source .salg")->required();
  mono_c->add_option("target", ma.target, "Target .salg")->required();
  mono_c->add_option("--map", ma.map, "Images, e.g. \"x -> x; y -> y\"")->required();

  PairArgs pa;
  CLI::App* hc = app.add_subcommand("hc", "Harish-Chandra pairs and their groups");
  hc->require_subcommand(1);
  auto pair_cmd = [&](const std::string& name, const std::string& help) {
    CLI::App* c = hc->add_subcommand(name, help);
    c->add_option("file", pa.file, ".shc document");
    c->add_option("--builtin", pa.builtin, "Built-in pair: unipotent, gl1, osp12, gl2");
    return c;
  };
  CLI::App* validate_c = pair_cmd("validate", "Check the pair axioms");
  CLI::App* mul_c = pair_cmd("mul", "Product in normal form");
  CLI::App* inv_c = pair_cmd("inv", "Inverse in normal form");
  for (CLI::App* c : {mul_c, inv_c}) {
    c->add_option("--coeff", pa.coeff, "Coefficient .salg (default Lambda(s,t,u,w))");
    c->add_option("--lhs", pa.lhs, "Element, e.g. \"g=[[1, 0], [0, 1]]; e=[s]\"")->required();
    c->add_option("--strategy", pa.strategy, "Rewriting order: leftmost or rightmost");
  }
  mul_c->add_option("--rhs", pa.rhs, "Second element")->required();
  CLI::App* hsdim_c = pair_cmd("sdim", "Super-dimension of the group");
  CLI::App* graded_c = pair_cmd("graded", "Is the bracket zero?");
  graded_c->add_flag("--show-gr", pa.show_gr, "Also print gr of the pair");

  OrbitArgs oa;
  auto orbit_cmd = [&](const std::string& name, const std::string& help) {
    CLI::App* c = app.add_subcommand(name, help);
    c->add_option("file", oa.file, ".salg document")->required();
    c->add_option("--derivation", oa.derivation, "Odd derivation, e.g. \"x -> 0; y -> 1\"");
    c->add_option("--point", oa.points, "Rational point (repeatable for verify-orbits)");
    return c;
  };
  CLI::App* orbit_c = orbit_cmd("orbit", "Orbit ideal, stabilizer and super-dimension at a point");
  orbit_c->add_option("--pivot", oa.pivot, "Index of the odd generator used as pivot");
  CLI::App* verify_c = orbit_cmd("verify-orbits", "Check the orbit statements at each point");

  std::vector<int> only;
  CLI::App* self_c = app.add_subcommand("selftest", "Run the acceptance checks");
  self_c->add_option("--only", only, "Restrict to these criteria")->delimiter(',');

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }

  std::string command;
  Outcome o;
  try {
    auto* sub = app.get_subcommands().front();
    command = sub->get_name();
    if (sub == ksdim_c) o = cmd_ksdim(aa, g);
    else if (sub == bar_c) o = cmd_bar(aa, g);
    else if (sub == gr_c) o = cmd_gr(aa, g);
    else if (sub == ann_c) o = cmd_ann(aa, g);
    else if (sub == params_c) o = cmd_odd_params(aa, g);
    else if (sub == regular_c) o = cmd_odd_regular(aa, g);
    else if (sub == phi_c) o = cmd_phi_dim(aa, g);
    else if (sub == loc_c) o = cmd_localize(aa, g);
    else if (sub == mono_c) o = cmd_mono_check(ma, g);
    else if (sub == orbit_c) o = cmd_orbit(oa, g);
    else if (sub == verify_c) o = cmd_verify_orbits(oa, g);
    else if (sub == self_c) o = cmd_selftest(only, g);
    else {
      auto* leaf = hc->get_subcommands().front();
      command = "hc " + leaf->get_name();
      if (leaf == validate_c) o = cmd_hc_validate(pa, g);
      else if (leaf == mul_c) o = cmd_hc_mul(pa, g, false);
      else if (leaf == inv_c) o = cmd_hc_mul(pa, g, true);
      else if (leaf == hsdim_c) o = cmd_hc_sdim(pa, g);
      else o = cmd_hc_graded(pa, g);
    }
  } catch (const std::logic_error& e) {
    if (!dynamic_cast<const std::invalid_argument*>(&e)) {
      err << "internal error: " << e.what() << "\n";
      return kExitInput;
    }
    if (g.json) out << Json{{"command", command}, {"error", e.what()}}.dump(2) << "\n";
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    if (g.json) {
      out << Json{{"command", command}, {"error", e.what()}}.dump(2) << "\n";
    }
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }

  if (g.json) {
    Json doc;
    doc["command"] = command;
    doc["inputs"] = o.inputs;
    doc["result"] = o.result;
    if (!o.certificate.is_null()) doc["certificate"] = o.certificate;
    out << doc.dump(2) << "\n";
  } else {
    out << o.text;
  }
  return o.code;
}

}  // namespace salg
