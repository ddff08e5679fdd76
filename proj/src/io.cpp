#include "tcx/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "tcx/error.hpp"

namespace tcx::io {

namespace {

[[noreturn]] void malformed(const std::string& field, const std::string& what) {
  throw Error(ErrorCode::MalformedInput, "field '" + field + "': " + what);
}

const Json& require(const Json& doc, const std::string& key) {
  if (!doc.is_object()) malformed(key, "enclosing value is not an object");
  auto it = doc.find(key);
  if (it == doc.end()) malformed(key, "missing");
  return *it;
}

const Json& require_array(const Json& j, const std::string& field) {
  if (!j.is_array()) malformed(field, "expected an array");
  return j;
}

std::size_t index_from(const Json& j, const std::string& field) {
  if (!j.is_number_integer() || j.get<long long>() < 0) malformed(field, "expected a non-negative integer");
  return j.get<std::size_t>();
}

int small_int_from(const Json& j, const std::string& field) {
  if (!j.is_number_integer()) malformed(field, "expected an integer");
  const auto v = j.get<long long>();
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) malformed(field, "integer out of range");
  return static_cast<int>(v);
}

std::vector<std::size_t> index_list(const Json& j, const std::string& field) {
  std::vector<std::size_t> out;
  for (const auto& x : require_array(j, field)) out.push_back(index_from(x, field));
  return out;
}

IntVector integer_list(const Json& j, const std::string& field) {
  IntVector out;
  for (const auto& x : require_array(j, field)) out.push_back(integer_from(x, field));
  return out;
}

}  // namespace

Json load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::MalformedInput, "cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::MalformedInput, "'" + path + "' is not valid JSON: " + e.what());
  }
}

Json to_json(const Integer& z) {
  if (z.fits_slong_p()) return Json(z.get_si());
  return Json(z.get_str());
}

Integer integer_from(const Json& j, const std::string& field) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) {
    Integer z;
    if (z.set_str(j.get<std::string>(), 10) != 0) malformed(field, "not a decimal integer");
    return z;
  }
  malformed(field, "expected an integer");
}

Json to_json(const Rational& q) { return Json::array({to_json(Integer(q.get_num())), to_json(Integer(q.get_den()))}); }

Rational rational_from(const Json& j, const std::string& field) {
  if (j.is_array()) {
    if (j.size() != 2) malformed(field, "a rational is [numerator, denominator]");
    const Integer den = integer_from(j[1], field);
    if (den == 0) malformed(field, "zero denominator");
    return make_rational(integer_from(j[0], field), den);
  }
  if (j.is_string()) {
    Rational q;
    if (q.set_str(j.get<std::string>(), 10) != 0 || q.get_den() == 0) malformed(field, "not a rational");
    q.canonicalize();
    return q;
  }
  return Rational(integer_from(j, field));
}

RawComplex raw_complex_from(const Json& doc) {
  RawComplex raw;
  raw.n = small_int_from(require(doc, "n"), "n");
  for (const auto& c : require_array(require(doc, "simplices"), "simplices")) raw.counts.push_back(index_from(c, "simplices"));
  for (const auto& f : require_array(require(doc, "faces"), "faces")) {
    if (!f.is_array() || f.size() != 4) malformed("faces", "entries are [dimension, index, slot, target]");
    raw.faces.push_back({small_int_from(f[0], "faces"), index_from(f[1], "faces"), small_int_from(f[2], "faces"),
                         index_from(f[3], "faces")});
  }
  return raw;
}

Json to_json(const RawComplex& raw) {
  Json faces = Json::array();
  for (const auto& f : raw.faces) faces.push_back({f.dim, f.index, f.slot, f.target});
  return {{"version", kVersion}, {"n", raw.n}, {"simplices", raw.counts}, {"faces", std::move(faces)}};
}

std::vector<AlphaEntry> alpha_from(const Json& doc) {
  std::vector<AlphaEntry> out;
  auto it = doc.find("alpha");
  if (it == doc.end()) return out;
  for (const auto& a : require_array(*it, "alpha")) {
    if (!a.is_array() || a.size() != 3) malformed("alpha", "entries are [ridge, slot, value]");
    out.push_back({index_from(a[0], "alpha"), small_int_from(a[1], "alpha"), integer_from(a[2], "alpha")});
  }
  return out;
}

Json alpha_to_json(const TropicalStructure& structure) {
  Json out = Json::array();
  for (const auto& e : structure.entries()) out.push_back({e.ridge, e.slot, to_json(e.value)});
  return out;
}

TropicalStructure structure_from(const Json& doc) {
  return TropicalStructure::build(DeltaComplex::build(raw_complex_from(doc)), alpha_from(doc));
}

Json fixture_json(const TropicalStructure& structure) {
  Json doc = to_json(structure.complex().raw());
  doc["alpha"] = alpha_to_json(structure);
  return doc;
}

Divisor divisor_from(const Json& j) {
  Divisor d;
  const Json* ridge_part = &j;
  if (j.is_object()) {
    ridge_part = &require(j, "ridge_part");
    if (auto it = j.find("facet_pieces"); it != j.end())
      for (const auto& p : require_array(*it, "facet_pieces")) {
        if (!p.is_array() || p.size() != 5) malformed("facet_pieces", "entries are [facet, normal, num, den, multiplicity]");
        d.facet_pieces.push_back({index_from(p[0], "facet_pieces"), integer_list(p[1], "facet_pieces"),
                                  rational_from(Json::array({p[2], p[3]}), "facet_pieces"), integer_from(p[4], "facet_pieces")});
      }
  }
  for (const auto& e : require_array(*ridge_part, "ridge_part")) {
    if (!e.is_array() || e.size() != 2) malformed("ridge_part", "entries are [ridge, coefficient]");
    d.add(index_from(e[0], "ridge_part"), integer_from(e[1], "ridge_part"));
  }
  return d;
}

Json to_json(const Divisor& d) {
  Json ridges = Json::array();
  for (const auto& [r, c] : d.ridge_part) ridges.push_back({r, to_json(c)});
  Json pieces = Json::array();
  for (const auto& p : d.facet_pieces)
    pieces.push_back({p.facet, to_json(p.normal), to_json(Integer(p.offset.get_num())), to_json(Integer(p.offset.get_den())),
                      to_json(p.multiplicity)});
  return {{"ridge_part", std::move(ridges)}, {"facet_pieces", std::move(pieces)}};
}

Curve curve_from(const Json& j) {
  Curve c;
  for (const auto& e : require_array(j, "curve")) {
    if (!e.is_array() || e.size() != 2) malformed("curve", "entries are [edge, multiplicity]");
    c.add(index_from(e[0], "curve"), integer_from(e[1], "curve"));
  }
  return c;
}

Json to_json(const Curve& c) {
  Json out = Json::array();
  for (const auto& [e, m] : c.multiplicities) out.push_back({e, to_json(m)});
  return out;
}

Json to_json(const PointSum& p) {
  Json out = Json::array();
  for (const auto& [at, c] : p.entries) {
    Json where = at.on_edge ? Json::array({"e", at.index, to_json(Integer(at.coordinate.get_num())),
                                           to_json(Integer(at.coordinate.get_den()))})
                            : Json::array({"v", at.index});
    out.push_back({std::move(where), to_json(Integer(c.get_num())), to_json(Integer(c.get_den()))});
  }
  return out;
}

BreakpointFunction breakpoint_function_from(const Json& j) {
  BreakpointFunction f;
  for (const auto& e : require_array(require(j, "edges"), "edges")) {
    if (!e.is_array() || e.size() != 2) malformed("edges", "entries are [edge, [[coordinate, value], ...]]");
    auto& pts = f.edges[index_from(e[0], "edges")];
    for (const auto& p : require_array(e[1], "edges")) {
      if (!p.is_array() || p.size() != 2) malformed("edges", "breakpoints are [coordinate, value]");
      pts.push_back({rational_from(p[0], "edges"), rational_from(p[1], "edges")});
    }
  }
  return f;
}

EmbeddedInput embedded_from(const Json& doc) {
  EmbeddedInput in;
  in.ambient_dim = small_int_from(require(doc, "N"), "N");
  for (const auto& v : require_array(require(doc, "vertices"), "vertices")) in.vertices.push_back(integer_list(v, "vertices"));
  if (auto it = doc.find("bounded_cells"); it != doc.end())
    for (const auto& c : require_array(*it, "bounded_cells")) in.bounded_cells.push_back(index_list(c, "bounded_cells"));
  if (auto it = doc.find("unbounded_cells"); it != doc.end())
    for (const auto& c : require_array(*it, "unbounded_cells")) {
      UnboundedCell cell{index_list(require(c, "vertices"), "unbounded_cells.vertices"), {}};
      for (const auto& r : require_array(require(c, "rays"), "unbounded_cells.rays")) cell.rays.push_back(integer_list(r, "rays"));
      in.unbounded_cells.push_back(std::move(cell));
    }
  if (auto it = doc.find("sheets"); it != doc.end()) {
    if (auto c = it->find("counts"); c != it->end())
      for (const auto& e : require_array(*c, "sheets.counts")) {
        if (!e.is_array() || e.size() != 2) malformed("sheets.counts", "entries are [cell vertices, count]");
        in.sheet_counts.push_back({index_list(e[0], "sheets.counts"), index_from(e[1], "sheets.counts")});
      }
    if (auto m = it->find("face_sheet_maps"); m != it->end())
      for (const auto& e : require_array(*m, "sheets.face_sheet_maps")) {
        if (!e.is_array() || e.size() != 3) malformed("sheets.face_sheet_maps", "entries are [cell vertices, face vertices, map]");
        in.face_sheet_maps.push_back({index_list(e[0], "sheets.face_sheet_maps"), index_list(e[1], "sheets.face_sheet_maps"),
                                      index_list(e[2], "sheets.face_sheet_maps")});
      }
  }
  return in;
}

namespace {

std::map<std::size_t, Integer> index_degrees(const Json& j, const std::string& field) {
  std::map<std::size_t, Integer> out;
  for (const auto& e : require_array(j, field)) {
    if (!e.is_array() || e.size() != 2) malformed(field, "entries are [index, degree]");
    out[index_from(e[0], field)] += integer_from(e[1], field);
  }
  return out;
}

}  // namespace

DegenerationData degeneration_from(const Json& doc) {
  const std::string mode = require(doc, "mode").is_string() ? require(doc, "mode").get<std::string>() : "";
  DegenerationData data{DeltaComplex::build(raw_complex_from(doc)), DegenerationMode::Strict, {}, {}, {}, {}, {}};
  if (mode == "strict") {
    data.mode = DegenerationMode::Strict;
  } else if (mode == "non-strict") {
    data.mode = DegenerationMode::NonStrict;
  } else {
    malformed("mode", "expected \"strict\" or \"non-strict\"");
  }
  if (auto it = doc.find("vertex_ridge_degrees"); it != doc.end())
    for (const auto& e : require_array(*it, "vertex_ridge_degrees")) {
      if (!e.is_array() || e.size() != 3) malformed("vertex_ridge_degrees", "entries are [vertex, ridge, degree]");
      data.vertex_ridge_degrees[{index_from(e[0], "vertex_ridge_degrees"), index_from(e[1], "vertex_ridge_degrees")}] =
          integer_from(e[2], "vertex_ridge_degrees");
    }
  if (auto it = doc.find("self_intersections"); it != doc.end())
    for (const auto& e : require_array(*it, "self_intersections")) {
      if (!e.is_array() || e.size() != 3) malformed("self_intersections", "entries are [simplex, link vertex, value]");
      data.self_intersections[{index_from(e[0], "self_intersections"), index_from(e[1], "self_intersections")}] =
          integer_from(e[2], "self_intersections");
    }
  if (auto it = doc.find("divisors"); it != doc.end()) {
    if (!it->is_object()) malformed("divisors", "expected an object of named degree lists");
    for (const auto& [name, v] : it->items()) data.divisors[name] = index_degrees(v, "divisors." + name);
  }
  if (auto it = doc.find("curves"); it != doc.end()) {
    if (!it->is_object()) malformed("curves", "expected an object of named degree lists");
    for (const auto& [name, v] : it->items()) data.curves[name] = index_degrees(v, "curves." + name);
  }
  if (auto it = doc.find("claimed"); it != doc.end())
    for (const auto& e : require_array(*it, "claimed")) {
      if (!e.is_array() || e.size() != 3 || !e[0].is_string() || !e[1].is_string())
        malformed("claimed", "entries are [divisor name, curve name, degree]");
      data.claimed[{e[0].get<std::string>(), e[1].get<std::string>()}] = rational_from(e[2], "claimed");
    }
  return data;
}

Json to_json(const IntMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

Json to_json(const IntVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Json to_json(const RatVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Json to_json(const Inertia& in) { return Json::array({in.positive, in.negative, in.zero}); }

std::map<std::string, Divisor> named_divisors(const Json& doc) {
  std::map<std::string, Divisor> out;
  if (auto it = doc.find("divisors"); it != doc.end()) {
    if (!it->is_object()) malformed("divisors", "expected an object of named divisors");
    for (const auto& [name, v] : it->items()) out[name] = divisor_from(v);
  }
  return out;
}

std::map<std::string, Curve> named_curves(const Json& doc) {
  std::map<std::string, Curve> out;
  if (auto it = doc.find("curves"); it != doc.end()) {
    if (!it->is_object()) malformed("curves", "expected an object of named curves");
    for (const auto& [name, v] : it->items()) out[name] = curve_from(v);
  }
  return out;
}

}  // namespace tcx::io
