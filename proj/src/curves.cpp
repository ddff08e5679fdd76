#include "tcx/curves.hpp"

#include <set>
#include <string>

#include "tcx/error.hpp"

namespace tcx {

Integer Curve::multiplicity(std::size_t edge) const {
  auto it = multiplicities.find(edge);
  return it == multiplicities.end() ? Integer(0) : it->second;
}

void Curve::add(std::size_t edge, const Integer& m) {
  if (m == 0) return;
  Integer& slot = multiplicities[edge];
  slot += m;
  if (slot == 0) multiplicities.erase(edge);
}

bool Curve::effective() const {
  for (const auto& [e, m] : multiplicities)
    if (m < 0) return false;
  return true;
}

std::vector<std::size_t> Curve::support_vertices(const DeltaComplex& complex) const {
  std::set<std::size_t> out;
  for (const auto& [e, m] : multiplicities) {
    if (e >= complex.count(1)) throw Error(ErrorCode::IndexMismatch, "curve names edge " + std::to_string(e));
    for (auto v : complex.vertices({1, e})) out.insert(v);
  }
  return {out.begin(), out.end()};
}

namespace {

struct RelationRow {
  std::size_t ridge;
  RatVector coefficients;
};

// Column of the edge branch at `vertex` running from slot `from` to slot `to`
// of simplex s.
std::size_t branch_column(const DeltaComplex& x, std::size_t vertex, SimplexId s, int from, int to) {
  const std::vector<int> slots = from < to ? std::vector<int>{from, to} : std::vector<int>{to, from};
  const std::size_t edge = x.face_of(s, slots);
  const int pos = from < to ? 0 : 1;
  const std::size_t t = x.link_vertex_index({0, vertex}, edge, {pos});
  if (t == DeltaComplex::npos) throw Error(ErrorCode::MalformedInput, "edge branch missing from vertex link");
  return 1 + t;
}

std::vector<RelationRow> relation_rows(const TropicalStructure& structure, std::size_t vertex) {
  const DeltaComplex& x = structure.complex();
  const int n = structure.n();
  const std::size_t width = 1 + x.degree({0, vertex});
  std::vector<RelationRow> rows;
  if (n == 0) return rows;

  // (ridge, slot of the ridge sitting at vertex)
  std::vector<std::pair<std::size_t, int>> incidences;
  if (n == 1) {
    incidences.emplace_back(vertex, 0);
  } else {
    const Link& link = x.link({0, vertex});
    if (link.size(n - 2) > 0)
      for (const auto& el : link.elements[static_cast<std::size_t>(n - 2)]) incidences.emplace_back(el.coface.index, el.inclusion[0]);
  }

  for (const auto& [ridge, slot] : incidences) {
    const SimplexId rid{n - 1, ridge};
    RatVector row(width);
    for (const auto& t : x.link(rid).vertices()) {
      const int from = t.inclusion[static_cast<std::size_t>(slot)];
      const int to = DeltaComplex::opposite(t).slot;
      row[branch_column(x, vertex, t.coface, from, to)] += 1;
    }
    for (int j = 0; j < n; ++j) {
      const Rational a(structure.alpha(ridge, j));
      if (j == slot) {
        row[0] -= a;
      } else {
        row[branch_column(x, vertex, rid, slot, j)] -= a;
      }
    }
    rows.push_back({ridge, std::move(row)});
  }
  return rows;
}

}  // namespace

RatMatrix germ_relations(const TropicalStructure& structure, std::size_t vertex) {
  const auto rows = relation_rows(structure, vertex);
  const std::size_t width = 1 + structure.complex().degree({0, vertex});
  RatMatrix m(rows.size(), width);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < width; ++j) m(i, j) = rows[i].coefficients[j];
  return m;
}

std::vector<std::size_t> germ_relation_ridges(const TropicalStructure& structure, std::size_t vertex) {
  std::vector<std::size_t> out;
  for (const auto& row : relation_rows(structure, vertex)) out.push_back(row.ridge);
  return out;
}

GermSpace germ_space(const TropicalStructure& structure, std::size_t vertex) {
  if (vertex >= structure.complex().vertex_count()) throw Error(ErrorCode::IndexMismatch, "no vertex " + std::to_string(vertex));
  GermSpace g;
  g.vertex = vertex;
  g.branches = structure.complex().link({0, vertex}).vertices();
  g.basis = kernel_basis(germ_relations(structure, vertex));
  return g;
}

Rational slope_sum(const TropicalStructure& structure, const Curve& curve, std::size_t vertex, const RatVector& germ) {
  const auto& branches = structure.complex().link({0, vertex}).vertices();
  Rational sum = 0;
  for (std::size_t t = 0; t < branches.size(); ++t) {
    const Integer m = curve.multiplicity(branches[t].coface.index);
    if (m != 0) sum += Rational(m) * (germ[1 + t] - germ[0]);
  }
  return sum;
}

BalanceResult is_balanced(const TropicalStructure& structure, const Curve& curve) {
  BalanceResult result;
  for (auto v : curve.support_vertices(structure.complex())) {
    for (const auto& germ : germ_space(structure, v).basis) {
      if (slope_sum(structure, curve, v, germ) != 0) {
        result.balanced = false;
        result.failing_vertex = v;
        result.certificate = germ;
        return result;
      }
    }
  }
  return result;
}

void PointSum::add(const Location& at, const Rational& c) {
  if (c == 0) return;
  Rational& slot = entries[at];
  slot += c;
  if (slot == 0) entries.erase(at);
}

Rational PointSum::degree() const {
  Rational d = 0;
  for (const auto& [at, c] : entries) d += c;
  return d;
}

PointSum restrict_divisor(const TropicalStructure& structure, const Curve& curve, const BreakpointFunction& f) {
  const DeltaComplex& x = structure.complex();
  std::map<std::size_t, Rational> vertex_values;
  auto pin = [&](std::size_t v, const Rational& value) {
    auto [it, inserted] = vertex_values.emplace(v, value);
    if (!inserted && it->second != value)
      throw Error(ErrorCode::DiscontinuousInput, "values " + to_string(it->second) + " and " + to_string(value) +
                                                     " meet at vertex " + std::to_string(v));
  };

  PointSum out;
  for (const auto& [edge, mult] : curve.multiplicities) {
    if (edge >= x.count(1)) throw Error(ErrorCode::IndexMismatch, "curve names edge " + std::to_string(edge));
    auto it = f.edges.find(edge);
    if (it == f.edges.end()) throw Error(ErrorCode::MalformedInput, "function undefined on edge " + std::to_string(edge));
    const auto& pts = it->second;
    if (pts.size() < 2 || pts.front().coordinate != 0 || pts.back().coordinate != 1)
      throw Error(ErrorCode::MalformedInput, "breakpoints on edge " + std::to_string(edge) + " must run from 0 to 1");
    for (std::size_t k = 1; k < pts.size(); ++k)
      if (!(pts[k - 1].coordinate < pts[k].coordinate))
        throw Error(ErrorCode::MalformedInput, "breakpoints on edge " + std::to_string(edge) + " must increase");

    const auto& ends = x.vertices({1, edge});
    pin(ends[0], pts.front().value);
    pin(ends[1], pts.back().value);

    const Rational m(mult);
    std::vector<Rational> slopes;
    for (std::size_t k = 1; k < pts.size(); ++k)
      slopes.push_back((pts[k].value - pts[k - 1].value) / (pts[k].coordinate - pts[k - 1].coordinate));
    out.add({false, ends[0], 0}, m * slopes.front());
    out.add({false, ends[1], 0}, -m * slopes.back());
    for (std::size_t k = 1; k + 1 < pts.size(); ++k) out.add({true, edge, pts[k].coordinate}, m * (slopes[k] - slopes[k - 1]));
  }
  return out;
}

std::optional<RatVector> defining_germ(const TropicalStructure& structure, const Divisor& d, std::size_t vertex) {
  const auto rows = relation_rows(structure, vertex);
  const std::size_t width = 1 + structure.complex().degree({0, vertex});
  RatMatrix m(rows.size(), width);
  RatVector rhs(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < width; ++j) m(i, j) = rows[i].coefficients[j];
    rhs[i] = d.coefficient(rows[i].ridge);
  }
  auto germ = solve_rational(m, rhs);
  if (!germ) return std::nullopt;
  const Rational base = (*germ)[0];
  for (auto& value : *germ) value -= base;
  return germ;
}

Intersection intersect_degree(const TropicalStructure& structure, const Divisor& d, const Curve& curve) {
  if (!d.ridge_supported()) throw Error(ErrorCode::NotRidgeSupported, "divisor has facet-interior pieces");
  const BalanceResult balance = is_balanced(structure, curve);
  if (!balance.balanced) throw Error(ErrorCode::NotBalanced, "curve fails balancing at vertex " + std::to_string(*balance.failing_vertex));

  const DeltaComplex& x = structure.complex();
  const std::vector<std::size_t> support = curve.support_vertices(x);
  const int n = structure.n();
  if (n >= 2) {
    const std::set<std::size_t> touched(support.begin(), support.end());
    for (std::size_t q = 0; q < x.count(n - 2); ++q) {
      bool meets = false;
      for (auto v : x.vertices({n - 2, q})) meets = meets || touched.count(v) > 0;
      if (meets && local_cartier_test(structure, d, {n - 2, q}).kind == CartierKind::Neither)
        throw Error(ErrorCode::NotQCartierNearCurve, "divisor is not Q-Cartier at simplex " + std::to_string(q) + " of dimension " + std::to_string(n - 2));
    }
  }

  Intersection result;
  for (auto v : support) {
    const auto germ = defining_germ(structure, d, v);
    if (!germ) throw Error(ErrorCode::NotQCartierNearCurve, "no local defining function at vertex " + std::to_string(v));
    result.points.add({false, v, 0}, slope_sum(structure, curve, v, *germ));
  }
  result.degree = result.points.degree();
  return result;
}

}  // namespace tcx
