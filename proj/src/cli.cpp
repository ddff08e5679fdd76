#include "tcx/cli.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "tcx/error.hpp"

namespace tcx::cli {

using io::Json;

Json Report::to_json() const {
  Json checks = Json::array();
  for (const auto& c : verdicts) checks.push_back({{"check", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  Json doc{{"version", io::kVersion}, {"command", command}, {"inputs", inputs}, {"verdicts", std::move(checks)}};
  if (error_code) {
    doc["error"] = {{"code", *error_code}, {"message", error_message}};
  } else {
    doc["result"] = result;
  }
  return doc;
}

int Report::exit_code() const {
  if (error_code) return 2;
  return std::all_of(verdicts.begin(), verdicts.end(), [](const Check& c) { return c.pass; }) ? 0 : 1;
}

std::string file_digest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::MalformedInput, "cannot open '" + path + "'");
  const std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr);
  std::ostringstream hex;
  for (unsigned int i = 0; i < len; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  return hex.str();
}

namespace {

struct Options {
  std::string file;
  unsigned jobs = 1;
  std::string phi, two_piece, divisor, other_divisor, curve, function_file, simplex, name, values;
  std::optional<std::size_t> ridge, q, vertex;
};

// ---- argument helpers ----

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep))
    if (!cur.empty()) out.push_back(cur);
  return out;
}

Integer parse_integer(const std::string& s, const std::string& what) {
  Integer z;
  if (s.empty() || z.set_str(s, 10) != 0) throw Error(ErrorCode::MalformedInput, what + ": '" + s + "' is not an integer");
  return z;
}

IntVector parse_list(const std::string& s, const std::string& what) {
  IntVector out;
  for (const auto& part : split(s, ',')) out.push_back(parse_integer(part, what));
  return out;
}

SimplexId parse_simplex(const std::string& s) {
  const auto parts = split(s, ':');
  if (parts.size() != 2) throw Error(ErrorCode::MalformedInput, "--cell/--simplex expects DIM:INDEX");
  return {static_cast<int>(parse_integer(parts[0], "dimension").get_si()),
          static_cast<std::size_t>(parse_integer(parts[1], "index").get_ui())};
}

std::vector<std::string> vertex_labels(const Json& doc) {
  std::vector<std::string> out;
  if (auto it = doc.find("vertex_labels"); it != doc.end() && it->is_array())
    for (const auto& l : *it) out.push_back(l.is_string() ? l.get<std::string>() : l.dump());
  return out;
}

std::string label_of(const DeltaComplex& x, SimplexId s, const std::vector<std::string>& labels) {
  std::string out;
  for (auto v : x.vertices(s)) out += v < labels.size() ? labels[v] : std::to_string(v) + ".";
  return out;
}

// Index of a simplex given either its number or its vertex-label word.
std::size_t resolve(const DeltaComplex& x, int dim, const std::string& key, const std::vector<std::string>& labels) {
  if (!key.empty() && std::all_of(key.begin(), key.end(), ::isdigit)) return parse_integer(key, "index").get_ui();
  for (std::size_t i = 0; i < x.count(dim); ++i)
    if (label_of(x, {dim, i}, labels) == key) return i;
  throw Error(ErrorCode::MalformedInput, "no simplex of dimension " + std::to_string(dim) + " labelled '" + key + "'");
}

// "name" from the fixture, "0", or "RIDGE:COEF,..." where RIDGE is an index or label word.
Divisor divisor_spec(const std::string& spec, const Json& doc, const TropicalStructure& t) {
  if (spec.empty() || spec == "0") return {};
  const auto named = io::named_divisors(doc);
  if (auto it = named.find(spec); it != named.end()) return it->second;
  if (spec.find(':') == std::string::npos) throw Error(ErrorCode::UnknownName, "no divisor named '" + spec + "'");
  const auto labels = vertex_labels(doc);
  Divisor d;
  for (const auto& term : split(spec, ',')) {
    const auto kv = split(term, ':');
    if (kv.size() != 2) throw Error(ErrorCode::MalformedInput, "divisor terms are RIDGE:COEFFICIENT");
    d.add(resolve(t.complex(), t.n() - 1, kv[0], labels), parse_integer(kv[1], "coefficient"));
  }
  return d;
}

Curve curve_spec(const std::string& spec, const Json& doc, const DeltaComplex& x) {
  Curve c;
  if (spec.empty() || spec == "0") return c;
  if (spec == "all") {
    for (std::size_t e = 0; e < x.count(1); ++e) c.add(e, 1);
    return c;
  }
  const auto named = io::named_curves(doc);
  if (auto it = named.find(spec); it != named.end()) return it->second;
  if (spec.find(':') == std::string::npos) throw Error(ErrorCode::UnknownName, "no curve named '" + spec + "'");
  const auto labels = vertex_labels(doc);
  for (const auto& term : split(spec, ',')) {
    const auto kv = split(term, ':');
    if (kv.size() != 2) throw Error(ErrorCode::MalformedInput, "curve terms are EDGE:MULTIPLICITY");
    c.add(resolve(x, 1, kv[0], labels), parse_integer(kv[1], "multiplicity"));
  }
  return c;
}

Json labeled(const Divisor& d, const TropicalStructure& t, const std::vector<std::string>& labels) {
  Json out = Json::object();
  if (labels.empty()) return out;
  for (const auto& [r, c] : d.ridge_part) out[label_of(t.complex(), {t.n() - 1, r}, labels)] = io::to_json(c);
  return out;
}

Json link_json(const DeltaComplex& x, SimplexId s) {
  const Link& link = x.link(s);
  Json dims = Json::array();
  for (std::size_t m = 0; m < link.elements.size(); ++m) {
    Json elems = Json::array();
    for (std::size_t e = 0; e < link.elements[m].size(); ++e) {
      const auto& el = link.elements[m][e];
      Json j{{"coface", {el.coface.dim, el.coface.index}}, {"inclusion", el.inclusion}};
      if (m == 0) {
        const VertexSlot opp = DeltaComplex::opposite(el);
        j["opp"] = {{"slot", opp.slot}, {"vertex", x.vertex(opp)}};
      } else {
        j["faces"] = link.faces[m][e];
      }
      elems.push_back(std::move(j));
    }
    dims.push_back(std::move(elems));
  }
  return {{"simplex", {s.dim, s.index}}, {"degree", x.degree(s)}, {"elements", std::move(dims)}};
}

std::string kind_name(CartierKind k) {
  switch (k) {
    case CartierKind::Cartier: return "cartier";
    case CartierKind::QCartier: return "q-cartier";
    case CartierKind::Neither: return "neither";
  }
  return "neither";
}

Json cartier_json(const CartierResult& r) {
  Json j{{"kind", kind_name(r.kind)}, {"scope", "scoped-class"}};
  if (r.germ) j["germ"] = io::to_json(r.germ->values);
  return j;
}

Json weak_json(const WeakReport& w) {
  Json v = Json::array();
  for (const auto& x : w.violations) v.push_back({{"ridge", x.ridge}, {"lhs", io::to_json(x.alpha_sum)}, {"rhs", x.degree}});
  return {{"pass", w.pass()}, {"violations", std::move(v)}, {"zero_degree_ridges", w.zero_degree_ridges}};
}

Json balance_json(const BalanceResult& b) {
  Json j{{"balanced", b.balanced}};
  if (b.failing_vertex) j["failing_vertex"] = *b.failing_vertex;
  if (b.certificate) j["certificate"] = io::to_json(*b.certificate);
  return j;
}

Json weil_json(const WeilReport& w) {
  Json per = Json::array();
  for (std::size_t q = 0; q < w.per_base.size(); ++q) {
    Json j = cartier_json(w.per_base[q]);
    j["base"] = q;
    per.push_back(std::move(j));
  }
  return {{"weil", w.weil}, {"failing", w.failing}, {"per_base", std::move(per)}};
}

Json map_json(const std::map<std::size_t, Integer>& m) {
  Json out = Json::array();
  for (const auto& [k, v] : m) out.push_back({k, io::to_json(v)});
  return out;
}

// Abstract fixtures carry "n"; embedded fixtures carry "N" and are imported first.
TropicalStructure structure_of(const Json& doc) {
  if (doc.contains("N") && !doc.contains("n"))
    return structure_from_embedding(EmbeddedComplex::build(io::embedded_from(doc))).structure;
  return io::structure_from(doc);
}

// ---- handlers ----

void add_input(Report& report, const std::string& path) {
  report.inputs.push_back({{"path", path}, {"sha256", file_digest(path)}});
}

void handle_validate(const Options& o, Report& r) {
  const Json doc = io::load_file(o.file);
  const DeltaComplex x = DeltaComplex::build(io::raw_complex_from(doc));
  Json degrees = Json::array();
  if (x.n() >= 1)
    for (std::size_t i = 0; i < x.count(x.n() - 1); ++i) degrees.push_back(x.degree({x.n() - 1, i}));
  Json counts = Json::array();
  for (int d = 0; d <= x.n(); ++d) counts.push_back(x.count(d));
  r.result = {{"n", x.n()}, {"counts", counts}, {"regular", x.is_regular()}, {"ridge_degrees", degrees}};
  r.verdicts.push_back({"complex-valid", true, ""});
  if (!o.simplex.empty()) {
    const SimplexId s = parse_simplex(o.simplex);
    if (s.dim < 0 || s.dim > x.n() || s.index >= x.count(s.dim)) throw Error(ErrorCode::IndexMismatch, "no such simplex");
    r.result["link"] = link_json(x, s);
  }
  if (doc.contains("alpha") || x.n() <= 1) {
    const WeakReport weak = check_weak(TropicalStructure::build(x, io::alpha_from(doc)));
    r.result["weak"] = weak_json(weak);
    r.verdicts.push_back({"weak-constraint", weak.pass(), weak.pass() ? "" : std::to_string(weak.violations.size()) + " ridge(s) fail"});
  }
}

void handle_classify(const Options& o, Report& r) {
  const TropicalStructure t = structure_of(io::load_file(o.file));
  const Classification c = classify(t, o.jobs);
  Json per = Json::array();
  for (const auto& li : c.per_base)
    per.push_back({{"base", li.base},
                   {"matrix", io::to_json(local_matrix(t, {t.n() - 2, li.base}).entries)},
                   {"inertia", io::to_json(li.inertia)}});
  const bool tropical = c.verdict == Verdict::Tropical;
  r.result = {{"verdict", tropical ? "tropical" : "weak-only"}, {"per_base", per}, {"weak", weak_json(check_weak(t))}};
  r.verdicts.push_back({"tropical", tropical, tropical ? "" : "some local matrix lacks exactly one positive eigenvalue"});
}

void handle_div(const Options& o, Report& r) {
  const Json doc = io::load_file(o.file);
  const TropicalStructure t = structure_of(doc);
  const auto labels = vertex_labels(doc);
  if (!o.phi.empty() == !o.two_piece.empty()) throw Error(ErrorCode::MalformedInput, "give exactly one of --phi or --two-piece");
  if (!o.phi.empty()) {
    const VertexFunction phi{parse_list(o.phi, "--phi")};
    const Divisor d = div_vertex_function(t, phi);
    r.result = {{"divisor", io::to_json(d)}, {"labeled", labeled(d, t, labels)}};
    if (o.ridge) {
      if (*o.ridge >= t.ridge_count()) throw Error(ErrorCode::IndexMismatch, "no ridge " + std::to_string(*o.ridge));
      r.result["ridge_multiplicity"] = io::to_json(ridge_multiplicity(t, *o.ridge, restrict_to_ridge(t, *o.ridge, phi)));
    }
  } else {
    const auto parts = split(o.two_piece, ';');
    if (parts.size() != 3) throw Error(ErrorCode::MalformedInput, "--two-piece expects FACET;SLOPES;OFFSET");
    const TwoPieceFunction f{parse_integer(parts[0], "facet").get_ui(), parse_list(parts[1], "slopes"),
                             io::rational_from(Json(parts[2]), "offset")};
    r.result = {{"divisor", io::to_json(div_two_piece(t, f))}};
  }
}

void handle_cartier(const Options& o, Report& r) {
  const Json doc = io::load_file(o.file);
  const TropicalStructure t = structure_of(doc);
  const Divisor d = divisor_spec(o.divisor, doc, t);
  r.result["divisor"] = io::to_json(d);
  if (o.q) {
    const CartierResult c = local_cartier_test(t, d, {t.n() - 2, *o.q});
    r.result["local"] = cartier_json(c);
    r.result["local"]["base"] = *o.q;
    r.verdicts.push_back({"q-cartier", c.kind != CartierKind::Neither, kind_name(c.kind)});
    return;
  }
  const WeilReport w = weil_test(t, d, o.jobs);
  r.result["weil"] = weil_json(w);
  r.verdicts.push_back({"weil", w.weil, w.weil ? "" : std::to_string(w.failing.size()) + " simplices fail"});
}

void handle_classgroup(const Options& o, Report& r) {
  const Json doc = io::load_file(o.file);
  const TropicalStructure t = structure_of(doc);
  const ClassGroupPresentation g = class_group(t);
  r.result = {{"invariant_factors", io::to_json(g.invariant_factors())},
              {"free_rank", g.free_rank()},
              {"smith_diagonal", io::to_json(g.smith_diagonal())}};
  if (!o.divisor.empty()) {
    const IntVector coeffs = coefficient_vector(t, divisor_spec(o.divisor, doc, t));
    const auto ord = g.order(coeffs);
    r.result["class"] = io::to_json(g.class_of(coeffs));
    r.result["order"] = ord ? io::to_json(*ord) : Json(nullptr);
  }
}

void handle_equiv(const Options& o, Report& r) {
  const Json doc = io::load_file(o.file);
  const TropicalStructure t = structure_of(doc);
  const EquivalenceResult e = lin_equiv_witness(t, divisor_spec(o.divisor, doc, t), divisor_spec(o.other_divisor, doc, t));
  if (e.witness) {
    r.result = {{"witness", io::to_json(e.witness->values)}};
  } else {
    r.result = {{"witness", nullptr}, {"difference_class", io::to_json(e.difference_class)},
                {"order", e.order ? io::to_json(*e.order) : Json(nullptr)}};
  }
  r.verdicts.push_back({"linearly-equivalent", e.witness.has_value(), e.witness ? "" : "difference is a nonzero class"});
}

void handle_balance(const Options& o, Report& r) {
  const Json doc = io::load_file(o.file);
  const TropicalStructure t = structure_of(doc);
  const Curve c = curve_spec(o.curve, doc, t.complex());
  std::vector<std::size_t> vertices;
  if (o.vertex) {
    vertices.push_back(*o.vertex);
  } else if (!o.curve.empty()) {
    vertices = c.support_vertices(t.complex());
  } else {
    for (std::size_t v = 0; v < t.complex().vertex_count(); ++v) vertices.push_back(v);
  }
  Json germs = Json::array();
  for (auto v : vertices) {
    const GermSpace g = germ_space(t, v);
    Json basis = Json::array();
    for (const auto& b : g.basis) basis.push_back(io::to_json(b));
    germs.push_back({{"vertex", v}, {"dimension", g.dimension()}, {"basis", std::move(basis)}});
  }
  r.result["germ_spaces"] = std::move(germs);
  if (!o.curve.empty()) {
    const BalanceResult b = is_balanced(t, c);
    r.result["curve"] = io::to_json(c);
    r.result["effective"] = c.effective();
    r.result["balance"] = balance_json(b);
    r.verdicts.push_back({"balanced", b.balanced, b.balanced ? "" : "fails at vertex " + std::to_string(*b.failing_vertex)});
  }
}

void handle_intersect(const Options& o, Report& r) {
  const Json doc = io::load_file(o.file);
  const TropicalStructure t = structure_of(doc);
  const Curve c = curve_spec(o.curve, doc, t.complex());
  r.result["curve"] = io::to_json(c);
  if (!o.function_file.empty()) {
    add_input(r, o.function_file);
    const PointSum p = restrict_divisor(t, c, io::breakpoint_function_from(io::load_file(o.function_file)));
    r.result["points"] = io::to_json(p);
    r.result["degree"] = io::to_json(p.degree());
    return;
  }
  const Divisor d = divisor_spec(o.divisor, doc, t);
  const Intersection i = intersect_degree(t, d, c);
  r.result["divisor"] = io::to_json(d);
  r.result["points"] = io::to_json(i.points);
  r.result["degree"] = io::to_json(i.degree);
}

void handle_import_embedded(const Options& o, Report& r) {
  const EmbeddedComplex e = EmbeddedComplex::build(io::embedded_from(io::load_file(o.file)));
  const EmbeddedStructure es = structure_from_embedding(e);
  Json projection = Json::array();
  for (const auto& row : es.duplication.projection) {
    Json dim = Json::array();
    for (const auto& cs : row) dim.push_back({cs.cell, cs.sheet});
    projection.push_back(std::move(dim));
  }
  Json solves = Json::array();
  bool sums = true;
  const int n = es.structure.n();
  if (n >= 1)
    for (const auto& cs : es.duplication.projection[static_cast<std::size_t>(n - 1)]) {
      const BalancingSolution s = alpha_from_balancing(e, cs.cell, cs.sheet);
      Integer total = 0;
      for (const auto& c : s.coefficients) total += c;
      sums = sums && total == Integer(static_cast<unsigned long>(s.adjacent));
      solves.push_back({{"ridge_cell", s.ridge}, {"sheet", s.sheet}, {"coefficients", io::to_json(s.coefficients)}, {"d", s.adjacent}});
    }
  const WeakReport weak = check_weak(es.structure);
  r.result = {{"fixture", io::fixture_json(es.structure)}, {"projection", projection}, {"balancing", solves}};
  r.verdicts.push_back({"coefficient-sum", sums, ""});
  r.verdicts.push_back({"weak-constraint", weak.pass(), ""});
}

void handle_robust(const Options& o, Report& r) {
  const EmbeddedComplex e = EmbeddedComplex::build(io::embedded_from(io::load_file(o.file)));
  std::vector<SimplexId> cells;
  if (!o.simplex.empty()) {
    cells.push_back(parse_simplex(o.simplex));
  } else {
    for (int d = 0; d <= e.bounded().n(); ++d)
      for (std::size_t i = 0; i < e.bounded().count(d); ++i) cells.push_back({d, i});
  }
  Json out = Json::array();
  for (const auto& s : cells) {
    const Robustness rb = robustness_check(e, s);
    Json j{{"cell", {s.dim, s.index}}, {"vertices", e.bounded().vertices(s)}, {"robust", rb.robust}};
    Json rays = Json::array();
    for (const auto& u : rb.rays) rays.push_back(io::to_json(u));
    j["rays"] = std::move(rays);
    j["certificate"] = rb.certificate ? io::to_json(*rb.certificate) : Json(nullptr);
    if (rb.maximal_unbounded_cell) {
      const auto& cell = e.unbounded()[*rb.maximal_unbounded_cell];
      Json crays = Json::array();
      for (const auto& u : cell.rays) crays.push_back(io::to_json(u));
      j["maximal_unbounded_cell"] = {{"index", *rb.maximal_unbounded_cell}, {"vertices", cell.vertices}, {"rays", crays}};
    } else {
      j["maximal_unbounded_cell"] = nullptr;
    }
    out.push_back(std::move(j));
    r.verdicts.push_back({"robust[" + std::to_string(s.dim) + ":" + std::to_string(s.index) + "]", rb.robust, ""});
  }
  r.result["cells"] = std::move(out);
}

void handle_pushforward(const Options& o, Report& r) {
  const Json doc = io::load_file(o.file);
  const EmbeddedComplex e = EmbeddedComplex::build(io::embedded_from(doc));
  Divisor d;
  if (!o.divisor.empty()) {
    d = divisor_spec(o.divisor, doc, structure_from_embedding(e).structure);
  }
  std::optional<IntVector> values;
  if (!o.values.empty()) values = parse_list(o.values, "--f");
  const PushForwardReport p = push_forward_and_compare(e, d, values);
  r.result["pushed"] = map_json(p.pushed);
  if (p.agree) {
    r.result["pushed_div"] = map_json(*p.pushed_div);
    r.result["weights"] = map_json(*p.weights);
    r.verdicts.push_back({"push-forward-matches-weights", *p.agree, ""});
  }
}

void handle_degen_build(const Options& o, Report& r) {
  const DegenerationData data = io::degeneration_from(io::load_file(o.file));
  const DegenerationStructure s = build_structure_from_degeneration(data);
  Json checks = Json::array();
  for (const auto& c : s.checks) checks.push_back({{"name", c.name}, {"ridge", c.ridge}, {"pass", c.pass}});
  const WeakReport weak = check_weak(s.structure);
  r.result = {{"alpha", io::alpha_to_json(s.structure)}, {"checks", checks}, {"weak", weak_json(weak)}};
  r.verdicts.push_back({"weak-constraint", weak.pass(), ""});
}

void handle_specialize(const Options& o, Report& r) {
  const DegenerationData data = io::degeneration_from(io::load_file(o.file));
  const Specialization s = specialize(data, o.name, o.jobs);
  if (const auto* d = std::get_if<DivisorSpecialization>(&s)) {
    r.result = {{"kind", "divisor"}, {"divisor", io::to_json(d->divisor)}, {"weil", weil_json(d->weil)}};
    r.verdicts.push_back({"weil", d->weil.weil, ""});
  } else {
    const auto& c = std::get<CurveSpecialization>(s);
    r.result = {{"kind", "curve"}, {"curve", io::to_json(c.curve)}, {"balance", balance_json(c.balance)}};
    r.verdicts.push_back({"balanced", c.balance.balanced, c.balance.balanced ? "" : "degeneration may not be numerically faithful"});
  }
}

void handle_verify(const Options& o, Report& r) {
  const DegenerationData data = io::degeneration_from(io::load_file(o.file));
  const TheoremReport t = verify_theorem(data, o.divisor, o.curve, o.jobs);
  r.result = {{"computed", io::to_json(t.computed)}, {"claimed", io::to_json(t.claimed)}, {"match", t.match},
              {"points", io::to_json(t.intersection.points)}};
  r.verdicts.push_back({"match", t.match, "computed " + to_string(t.computed) + ", claimed " + to_string(t.claimed)});
}

struct Entry {
  Subcommand info;
  std::function<void(CLI::App&, Options&)> configure;
  std::function<void(const Options&, Report&)> handle;
};

void file_arg(CLI::App& app, Options& o) { app.add_option("file", o.file, "fixture file")->required(); }

const std::vector<Entry>& entries() {
  static const std::vector<Entry> table = {
      {{"validate", "validate a complex, its links and the weak constraint", {"build_complex", "link_of", "check_weak"}},
       [](CLI::App& a, Options& o) {
         file_arg(a, o);
         a.add_option("--simplex", o.simplex, "report the link of DIM:INDEX");
       },
       handle_validate},
      {{"classify", "local intersection matrices and the tropical verdict", {"local_matrix", "classify"}},
       file_arg, handle_classify},
      {{"div", "divisors of vertex functions and two-piece functions",
        {"div_vertex_function", "ridge_multiplicity", "div_two_piece"}},
       [](CLI::App& a, Options& o) {
         file_arg(a, o);
         a.add_option("--phi", o.phi, "comma-separated vertex values");
         a.add_option("--ridge", o.ridge, "also report this ridge's multiplicity");
         a.add_option("--two-piece", o.two_piece, "FACET;SLOPES;OFFSET");
       },
       handle_div},
      {{"cartier", "local Cartier and Weil tests", {"local_cartier_test", "weil_test"}},
       [](CLI::App& a, Options& o) {
         file_arg(a, o);
         a.add_option("--divisor", o.divisor, "name or RIDGE:COEF,...")->required();
         a.add_option("--q", o.q, "single (n-2)-simplex to test");
       },
       handle_cartier},
      {{"classgroup", "class group of ridge divisors", {"class_group"}},
       [](CLI::App& a, Options& o) {
         file_arg(a, o);
         a.add_option("--divisor", o.divisor, "also report this divisor's class");
       },
       handle_classgroup},
      {{"equiv", "linear equivalence witness", {"lin_equiv_witness"}},
       [](CLI::App& a, Options& o) {
         file_arg(a, o);
         a.add_option("--divisor", o.divisor, "first divisor")->required();
         a.add_option("--other", o.other_divisor, "second divisor")->required();
       },
       handle_equiv},
      {{"balance", "germ spaces and curve balancing", {"germ_space", "is_balanced"}},
       [](CLI::App& a, Options& o) {
         file_arg(a, o);
         a.add_option("--curve", o.curve, "name, 'all' or EDGE:MULT,...");
         a.add_option("--vertex", o.vertex, "only this vertex's germ space");
       },
       handle_balance},
      {{"intersect", "divisor-curve intersection or restriction of a function", {"restrict_divisor", "intersect_degree"}},
       [](CLI::App& a, Options& o) {
         file_arg(a, o);
         a.add_option("--curve", o.curve, "name, 'all' or EDGE:MULT,...")->required();
         a.add_option("--divisor", o.divisor, "name or RIDGE:COEF,...");
         a.add_option("--function", o.function_file, "breakpoint function file");
       },
       handle_intersect},
      {{"import-embedded", "duplicate sheets and derive structure constants", {"duplicate_sheets", "alpha_from_balancing"}},
       file_arg, handle_import_embedded},
      {{"robust", "robustness and maximal unbounded cells", {"robustness_check"}},
       [](CLI::App& a, Options& o) {
         file_arg(a, o);
         a.add_option("--cell", o.simplex, "bounded cell DIM:INDEX (default: all)");
       },
       handle_robust},
      {{"pushforward", "push-forward and the embedded weight comparison", {"push_forward_and_compare"}},
       [](CLI::App& a, Options& o) {
         file_arg(a, o);
         a.add_option("--divisor", o.divisor, "divisor on the duplicated complex");
         a.add_option("--f", o.values, "comma-separated values on embedded vertices");
       },
       handle_pushforward},
      {{"degen-build", "structure constants from degeneration data", {"build_structure_from_degeneration"}},
       file_arg, handle_degen_build},
      {{"specialize", "specialize a named divisor or curve", {"specialize"}},
       [](CLI::App& a, Options& o) {
         file_arg(a, o);
         a.add_option("--name", o.name, "divisor or curve name")->required();
       },
       handle_specialize},
      {{"verify", "compare computed and claimed intersection degrees", {"verify_theorem"}},
       [](CLI::App& a, Options& o) {
         file_arg(a, o);
         a.add_option("--divisor", o.divisor, "divisor name")->required();
         a.add_option("--curve", o.curve, "curve name")->required();
       },
       handle_verify},
  };
  return table;
}

void summarize(const Report& report, std::ostream& err) {
  if (report.error_code) {
    err << report.command << ": error " << *report.error_code << ": " << report.error_message << "\n";
    return;
  }
  for (const auto& c : report.verdicts)
    err << report.command << ": " << c.name << " " << (c.pass ? "PASS" : "FAIL") << (c.detail.empty() ? "" : " (" + c.detail + ")") << "\n";
  if (report.verdicts.empty()) err << report.command << ": done\n";
}

}  // namespace

const std::vector<Subcommand>& dispatch_table() {
  static const std::vector<Subcommand> table = [] {
    std::vector<Subcommand> out;
    for (const auto& e : entries()) out.push_back(e.info);
    return out;
  }();
  return table;
}

const std::vector<std::string>& library_operations() {
  static const std::vector<std::string> ops = {
      "build_complex",      "link_of",           "check_weak",         "local_matrix",
      "classify",           "div_vertex_function", "ridge_multiplicity", "div_two_piece",
      "local_cartier_test", "weil_test",         "class_group",        "lin_equiv_witness",
      "germ_space",         "is_balanced",       "restrict_divisor",   "intersect_degree",
      "duplicate_sheets",   "alpha_from_balancing", "robustness_check", "push_forward_and_compare",
      "build_structure_from_degeneration", "specialize", "verify_theorem"};
  return ops;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"tropical complex toolkit", "tcx"};
  Options options;
  app.add_option("--jobs", options.jobs, "worker threads for per-simplex checks")->check(CLI::PositiveNumber);
  app.require_subcommand(1);
  std::vector<std::pair<CLI::App*, const Entry*>> subs;
  for (const auto& e : entries()) {
    CLI::App* sub = app.add_subcommand(e.info.name, e.info.description);
    e.configure(*sub, options);
    subs.emplace_back(sub, &e);
  }

  Report report;
  report.command = args.empty() ? "" : args.front();
  std::vector<const char*> argv{"tcx"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    report.error_code = "Usage";
    report.error_message = e.what();
    out << report.to_json().dump(2) << "\n";
    summarize(report, err);
    return 2;
  }

  for (const auto& [sub, entry] : subs) {
    if (!sub->parsed()) continue;
    report.command = entry->info.name;
    try {
      add_input(report, options.file);
      entry->handle(options, report);
    } catch (const Error& e) {
      report.error_code = std::string(to_string(e.code()));
      report.error_message = e.detail();
    }
  }
  out << report.to_json().dump(2) << "\n";
  summarize(report, err);
  return report.exit_code();
}

}  // namespace tcx::cli
