#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "tcx/exact.hpp"
#include "tcx/pl_divisors.hpp"
#include "tcx/tropical_structure.hpp"

namespace tcx {

/// Formal sum of edges with integer multiplicities.
struct Curve {
  std::map<std::size_t, Integer> multiplicities;  // edge index -> nonzero multiplicity

  Integer multiplicity(std::size_t edge) const;
  void add(std::size_t edge, const Integer& m);
  bool effective() const;
  /// Vertices touched by an edge of nonzero multiplicity, ascending.
  std::vector<std::size_t> support_vertices(const DeltaComplex& complex) const;

  friend bool operator==(const Curve&, const Curve&) = default;
};

/// Linear germs at a vertex in coordinates (value at the vertex; value at the
/// far end of each edge branch t in link(v)_0).
struct GermSpace {
  std::size_t vertex = 0;
  std::vector<LinkElement> branches;
  std::vector<RatVector> basis;  // each of length 1 + branches.size()

  std::size_t dimension() const noexcept { return basis.size(); }
};

/// The linear relations cutting out germs at v, one row per (ridge, slot at v).
/// Columns are ordered as in GermSpace.
RatMatrix germ_relations(const TropicalStructure& structure, std::size_t vertex);
/// For each row of germ_relations, the ridge it belongs to.
std::vector<std::size_t> germ_relation_ridges(const TropicalStructure& structure, std::size_t vertex);

GermSpace germ_space(const TropicalStructure& structure, std::size_t vertex);

/// Multiplicity-weighted sum of outgoing slopes at v of a germ along the curve.
Rational slope_sum(const TropicalStructure& structure, const Curve& curve, std::size_t vertex, const RatVector& germ);

struct BalanceResult {
  bool balanced = true;
  std::optional<std::size_t> failing_vertex;
  std::optional<RatVector> certificate;  // a germ at failing_vertex with nonzero slope sum
};

BalanceResult is_balanced(const TropicalStructure& structure, const Curve& curve);

/// A point of the 1-skeleton: a vertex, or an interior point of an edge at a
/// coordinate in (0, 1) measured from the edge's slot-0 end.
struct Location {
  bool on_edge = false;
  std::size_t index = 0;
  Rational coordinate;

  friend bool operator==(const Location&, const Location&) = default;
  friend bool operator<(const Location& a, const Location& b) {
    if (a.on_edge != b.on_edge) return !a.on_edge;
    if (a.index != b.index) return a.index < b.index;
    return a.coordinate < b.coordinate;
  }
};

struct PointSum {
  std::map<Location, Rational> entries;  // no zero coefficients

  void add(const Location& at, const Rational& c);
  Rational degree() const;

  friend bool operator==(const PointSum&, const PointSum&) = default;
};

/// Piecewise-linear function on edges; each edge has unit lattice length.
struct BreakpointFunction {
  struct Breakpoint {
    Rational coordinate;
    Rational value;
  };
  std::map<std::size_t, std::vector<Breakpoint>> edges;  // ascending, from 0 to 1
};

/// Throws DiscontinuousInput when endpoint values disagree at a vertex.
PointSum restrict_divisor(const TropicalStructure& structure, const Curve& curve, const BreakpointFunction& f);

/// A germ at v defining D near v: solves the germ relations with right-hand
/// side the coefficients of D, normalised to vanish at v. nullopt if none.
std::optional<RatVector> defining_germ(const TropicalStructure& structure, const Divisor& d, std::size_t vertex);

struct Intersection {
  PointSum points;
  Rational degree;
};

/// Throws NotBalanced, NotRidgeSupported or NotQCartierNearCurve.
Intersection intersect_degree(const TropicalStructure& structure, const Divisor& d, const Curve& curve);

}  // namespace tcx
