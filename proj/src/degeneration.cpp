#include "tcx/degeneration.hpp"

#include <algorithm>
#include <string>

#include "tcx/error.hpp"

namespace tcx {

std::size_t opposite_count(const DeltaComplex& complex, std::size_t ridge, std::size_t vertex) {
  std::size_t count = 0;
  for (const auto& t : complex.link({complex.n() - 1, ridge}).vertices())
    if (complex.vertex(DeltaComplex::opposite(t)) == vertex) ++count;
  return count;
}

std::size_t loops_at(const DeltaComplex& complex, SimplexId q, std::size_t t) {
  const Link& link = complex.link(q);
  if (link.size(1) == 0) return 0;
  std::size_t loops = 0;
  for (const auto& edge : link.faces[1])
    if (edge[0] == t && edge[1] == t) ++loops;
  return loops;
}

namespace {

std::string at_ridge(std::size_t r) { return " at ridge " + std::to_string(r); }

Integer as_integer(std::size_t k) { return Integer(static_cast<unsigned long>(k)); }

}  // namespace

DegenerationStructure build_structure_from_degeneration(const DegenerationData& data) {
  const DeltaComplex& x = data.complex;
  const int n = x.n();
  const std::size_t ridges = n >= 1 ? x.count(n - 1) : 0;
  const std::size_t nv = x.vertex_count();
  std::vector<AlphaEntry> alpha;
  std::vector<ConsistencyCheck> checks;
  std::map<std::pair<std::size_t, std::size_t>, Integer> degrees;

  for (const auto& [key, value] : data.vertex_ridge_degrees)
    if (key.first >= nv || key.second >= ridges)
      throw Error(ErrorCode::InconsistentData, "intersection degree for unknown vertex or ridge" + at_ridge(key.second));

  if (data.mode == DegenerationMode::Strict) {
    if (!x.is_regular()) throw Error(ErrorCode::InconsistentData, "strict data requires a regular complex");
    for (std::size_t r = 0; r < ridges; ++r) {
      const auto& slots = x.vertices({n - 1, r});
      Integer total = 0;
      bool transverse = true;
      for (std::size_t v = 0; v < nv; ++v) {
        const bool on_ridge = std::find(slots.begin(), slots.end(), v) != slots.end();
        auto it = data.vertex_ridge_degrees.find({v, r});
        Integer value;
        if (on_ridge) {
          if (it == data.vertex_ridge_degrees.end())
            throw Error(ErrorCode::InconsistentData, "missing deg(C_v . C_r) for vertex " + std::to_string(v) + at_ridge(r));
          value = it->second;
        } else {
          value = as_integer(opposite_count(x, r, v));
          if (it != data.vertex_ridge_degrees.end() && it->second != value) transverse = false;
        }
        degrees[{v, r}] = value;
        total += value;
      }
      checks.push_back({"transverse-count", r, transverse});
      if (!transverse)
        throw Error(ErrorCode::InconsistentData, "off-ridge degree differs from the facet count" + at_ridge(r));
      checks.push_back({"principal-sum", r, total == 0});
      if (total != 0)
        throw Error(ErrorCode::InconsistentData, "sum of deg(C_v . C_r) is " + total.get_str() + ", not 0," + at_ridge(r));
      for (int i = 0; i < n; ++i) alpha.push_back({r, i, -degrees[{slots[static_cast<std::size_t>(i)], r}]});
    }
  } else {
    // for n = 1 the constants default to the vertex degrees
    for (std::size_t r = 0; r < ridges && n >= 2; ++r) {
      const SimplexId rid{n - 1, r};
      for (int i = 0; i < n; ++i) {
        const SimplexId q{n - 2, x.face(rid, i)};
        std::vector<int> inclusion;
        for (int j = 0; j < n; ++j)
          if (j != i) inclusion.push_back(j);
        const std::size_t t = x.link_vertex_index(q, r, inclusion);
        auto it = data.self_intersections.find({q.index, t});
        if (it == data.self_intersections.end())
          throw Error(ErrorCode::InconsistentData, "missing self-intersection for simplex " + std::to_string(q.index) +
                                                       ", link vertex " + std::to_string(t));
        alpha.push_back({r, i, -it->second + 2 * as_integer(loops_at(x, q, t))});
      }
    }
    TropicalStructure structure = TropicalStructure::build(x, alpha);
    for (std::size_t r = 0; r < ridges; ++r) {
      const auto& slots = x.vertices({n - 1, r});
      Integer total = 0;
      bool agrees = true;
      for (std::size_t v = 0; v < nv; ++v) {
        Integer value = as_integer(opposite_count(x, r, v));
        for (int i = 0; i < n; ++i)
          if (slots[static_cast<std::size_t>(i)] == v) value -= structure.alpha(r, i);
        auto it = data.vertex_ridge_degrees.find({v, r});
        if (it != data.vertex_ridge_degrees.end() && it->second != value) agrees = false;
        degrees[{v, r}] = value;
        total += value;
      }
      checks.push_back({"supplied-degrees", r, agrees});
      if (!agrees) throw Error(ErrorCode::InconsistentData, "supplied deg(C_v . C_r) contradicts the self-intersections" + at_ridge(r));
      checks.push_back({"principal-sum", r, total == 0});
      if (total != 0)
        throw Error(ErrorCode::InconsistentData, "sum of deg(C_v . C_r) is " + total.get_str() + ", not 0," + at_ridge(r));
    }
    return {std::move(structure), std::move(checks), std::move(degrees)};
  }
  return {TropicalStructure::build(x, alpha), std::move(checks), std::move(degrees)};
}

DivisorSpecialization specialize_divisor(const DegenerationData& data, const TropicalStructure& structure,
                                         const std::string& name, unsigned jobs) {
  auto it = data.divisors.find(name);
  if (it == data.divisors.end()) throw Error(ErrorCode::UnknownName, "no divisor named '" + name + "'");
  Divisor d;
  for (const auto& [r, degree] : it->second) {
    if (r >= structure.ridge_count()) throw Error(ErrorCode::IndexMismatch, "divisor '" + name + "' names ridge " + std::to_string(r));
    d.add(r, degree);
  }
  WeilReport weil = weil_test(structure, d, jobs);
  return {std::move(d), std::move(weil)};
}

CurveSpecialization specialize_curve(const DegenerationData& data, const TropicalStructure& structure,
                                     const std::string& name) {
  auto it = data.curves.find(name);
  if (it == data.curves.end()) throw Error(ErrorCode::UnknownName, "no curve named '" + name + "'");
  Curve c;
  for (const auto& [e, degree] : it->second) {
    if (e >= structure.complex().count(1)) throw Error(ErrorCode::IndexMismatch, "curve '" + name + "' names edge " + std::to_string(e));
    c.add(e, degree);
  }
  BalanceResult balance = is_balanced(structure, c);
  return {std::move(c), std::move(balance)};
}

Specialization specialize(const DegenerationData& data, const std::string& name, unsigned jobs) {
  const DegenerationStructure built = build_structure_from_degeneration(data);
  if (data.divisors.count(name)) return specialize_divisor(data, built.structure, name, jobs);
  if (data.curves.count(name)) return specialize_curve(data, built.structure, name);
  throw Error(ErrorCode::UnknownName, "no divisor or curve named '" + name + "'");
}

TheoremReport verify_theorem(const DegenerationData& data, const std::string& divisor, const std::string& curve,
                             unsigned jobs) {
  const DegenerationStructure built = build_structure_from_degeneration(data);
  const DivisorSpecialization d = specialize_divisor(data, built.structure, divisor, jobs);
  const CurveSpecialization c = specialize_curve(data, built.structure, curve);
  auto claim = data.claimed.find({divisor, curve});
  if (claim == data.claimed.end())
    throw Error(ErrorCode::UnknownName, "no claimed degree for ('" + divisor + "', '" + curve + "')");
  if (!d.weil.weil) throw Error(ErrorCode::PreconditionFailed, "weil_test fails for divisor '" + divisor + "'");
  if (!c.balance.balanced) throw Error(ErrorCode::PreconditionFailed, "curve '" + curve + "' is not balanced");
  TheoremReport report;
  try {
    report.intersection = intersect_degree(built.structure, d.divisor, c.curve);
  } catch (const Error& e) {
    throw Error(ErrorCode::PreconditionFailed, e.what());
  }
  report.computed = report.intersection.degree;
  report.claimed = claim->second;
  report.match = report.computed == report.claimed;
  return report;
}

}  // namespace tcx
