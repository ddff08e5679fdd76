#include <doctest.h>

#include <random>

#include "support.hpp"
#include "tcx/curves.hpp"
#include "tcx/error.hpp"

using namespace tcx;
using support::ridges;

namespace {

Curve all_edges(const TropicalStructure& t) {
  Curve c;
  for (std::size_t e = 0; e < t.complex().count(1); ++e) c.add(e, 1);
  return c;
}

Location vertex(std::size_t v) { return {false, v, 0}; }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::MalformedInput;
}

// Degree computed on the cover by stars of the vertices, with germs solved
// from each local matrix by Cramer's rule.
Rational degree_by_local_matrices(const TropicalStructure& t, const Divisor& d, const Curve& c) {
  Rational total = 0;
  for (std::size_t q = 0; q < t.complex().count(0); ++q) {
    const LocalMatrix m = local_matrix(t, {0, q});
    IntVector rhs;
    for (const auto& e : m.index) rhs.push_back(d.coefficient(e.coface.index));
    const RatVector x = oracle::cramer(m.entries, rhs);
    for (std::size_t i = 0; i < m.index.size(); ++i) total += Rational(c.multiplicity(m.index[i].coface.index)) * x[i];
  }
  return total;
}

}  // namespace

TEST_CASE("germ spaces") {
  const auto tet = support::structure("tetrahedron.json");
  for (std::size_t v = 0; v < 4; ++v) CHECK(germ_space(tet, v).dimension() == 1);
  const auto star = support::structure("star-graph.json");
  const GermSpace g = germ_space(star, 0);
  CHECK(g.dimension() == 3);
  for (const auto& b : g.basis) CHECK(b[1] + b[2] + b[3] == 3 * b[0]);
  const auto tri = support::structure("triangle.json");
  CHECK(germ_space(tri, 0).dimension() == 1);
  CHECK(germ_space(tri, 1).dimension() == 2);
  CHECK(germ_space(tri, 2).dimension() == 1);
}

TEST_CASE("germ spaces always contain the constants and satisfy their relations") {
  for (const char* name : {"triangle.json", "tetrahedron.json", "torus.json", "pinched.json", "path-graph.json",
                           "loop-graph.json", "star-graph.json"}) {
    CAPTURE(name);
    const auto t = support::structure(name);
    for (std::size_t v = 0; v < t.complex().vertex_count(); ++v) {
      const GermSpace g = germ_space(t, v);
      const RatMatrix rel = germ_relations(t, v);
      for (const auto& b : g.basis) CHECK(rel.apply(b) == RatVector(rel.rows(), 0));
      CHECK(rel.apply(RatVector(1 + g.branches.size(), 1)) == RatVector(rel.rows(), 0));
      CHECK(rank(rel) + g.dimension() == 1 + g.branches.size());
    }
  }
}

TEST_CASE("interior vertex of the hexagon has the affine functions as germs") {
  const EmbeddedComplex e = support::embedded("hexagon.json");
  const auto t = structure_from_embedding(e).structure;
  const GermSpace g = germ_space(t, 0);
  CHECK(g.dimension() == 3);
  const RatMatrix rel = germ_relations(t, 0);
  for (std::size_t axis = 0; axis < 2; ++axis) {
    RatVector affine{Rational(e.lifted(0)[axis])};
    for (const auto& b : g.branches) affine.push_back(Rational(e.lifted(t.complex().vertex(DeltaComplex::opposite(b)))[axis]));
    CHECK(rel.apply(affine) == RatVector(rel.rows(), 0));
  }
}

TEST_CASE("balancing") {
  const auto tet = support::structure("tetrahedron.json");
  CHECK(is_balanced(tet, Curve{}).balanced);
  CHECK(is_balanced(tet, all_edges(tet)).balanced);
  const auto star = support::structure("star-graph.json");
  Curve two;
  two.add(0, 1);
  two.add(1, 1);
  const BalanceResult r = is_balanced(star, two);
  CHECK_FALSE(r.balanced);
  CHECK(r.failing_vertex == std::size_t{0});
  REQUIRE(r.certificate.has_value());
  CHECK(slope_sum(star, two, 0, *r.certificate) != 0);
}

TEST_CASE("plane triangle: edges uv + uw fail to balance, at v") {
  const auto t = structure_from_embedding(support::embedded("plane.json")).structure;
  Curve c;
  c.add(0, 1);
  c.add(1, 1);
  const BalanceResult r = is_balanced(t, c);
  CHECK_FALSE(r.balanced);
  CHECK(r.failing_vertex == std::size_t{1});
  // at u only constants are linear, so u imposes nothing
  CHECK(germ_space(t, 0).dimension() == 1);
}

TEST_CASE("restriction of functions to curves") {
  const auto path = support::structure("path-graph.json");
  Curve c;
  c.add(0, 1);
  c.add(1, 1);
  BreakpointFunction f;
  f.edges[0] = {{0, 0}, {1, 1}};
  f.edges[1] = {{0, 1}, {1, 0}};
  PointSum expected;
  expected.add(vertex(0), 1);
  expected.add(vertex(1), -2);
  expected.add(vertex(2), 1);
  CHECK(restrict_divisor(path, c, f) == expected);

  const auto loopless = support::structure("path-graph.json");
  Curve single;
  single.add(0, 3);
  BreakpointFunction tent;
  tent.edges[0] = {{0, 0}, {Rational(1, 2), Rational(1, 2)}, {1, 0}};
  const PointSum p = restrict_divisor(loopless, single, tent);
  CHECK(p.entries.at({true, 0, Rational(1, 2)}) == -6);
  CHECK(p.entries.at(vertex(0)) == 3);
  CHECK(p.entries.at(vertex(1)) == 3);
  CHECK(p.degree() == 0);

  BreakpointFunction broken;
  broken.edges[0] = {{0, 0}, {1, 1}};
  broken.edges[1] = {{0, 2}, {1, 0}};
  CHECK(code_of([&] { restrict_divisor(path, c, broken); }) == ErrorCode::DiscontinuousInput);
}

TEST_CASE("tetrahedron: [cd] meets all six edges in [c] + [d]") {
  const auto t = support::structure("tetrahedron.json");
  const Intersection i = intersect_degree(t, ridges({{5, 1}}), all_edges(t));
  PointSum expected;
  expected.add(vertex(2), 1);
  expected.add(vertex(3), 1);
  CHECK(i.points == expected);
  CHECK(i.degree == 2);
  CHECK(degree_by_local_matrices(t, ridges({{5, 1}}), all_edges(t)) == 2);
}

TEST_CASE("linearly equivalent divisors have equal degree") {
  const auto t = support::structure("tetrahedron.json");
  const Curve c = all_edges(t);
  const Rational a = intersect_degree(t, ridges({{5, 2}}), c).degree;
  const Rational b = intersect_degree(t, ridges({{0, 2}}), c).degree;
  CHECK(a == 4);
  CHECK(b == 4);
}

TEST_CASE("intersection preconditions") {
  const auto t = support::structure("tetrahedron.json");
  const auto tri = support::structure("triangle.json");
  Curve c;
  c.add(0, 1);
  CHECK(code_of([&] { intersect_degree(tri, Divisor{}, c); }) == ErrorCode::NotBalanced);
  // uv - vw is balanced since only v has nonconstant germs, and [uv] is not Q-Cartier at v
  Curve signed_pair;
  signed_pair.add(0, 1);
  signed_pair.add(2, -1);
  REQUIRE(is_balanced(tri, signed_pair).balanced);
  CHECK(code_of([&] { intersect_degree(tri, ridges({{0, 1}}), signed_pair); }) == ErrorCode::NotQCartierNearCurve);
  CHECK(code_of([&] { intersect_degree(t, div_two_piece(t, {0, {1, -1}, 0}), all_edges(t)); }) ==
        ErrorCode::NotRidgeSupported);
}

TEST_CASE("principal divisors meet balanced curves in degree zero") {
  std::mt19937 rng(17);
  struct Case {
    TropicalStructure t;
    std::vector<Curve> curves;
  };
  std::vector<Case> cases;
  for (const char* name : {"tetrahedron.json", "torus.json", "path-graph.json", "star-graph.json", "loop-graph.json"}) {
    const auto doc = support::load(name);
    Case k{io::structure_from(doc), {}};
    for (const auto& [n, c] : io::named_curves(doc))
      if (is_balanced(k.t, c).balanced) k.curves.push_back(c);
    cases.push_back(k);
  }
  const auto hex = structure_from_embedding(support::embedded("hexagon.json")).structure;
  cases.push_back({hex, {}});
  for (auto& k : cases) {
    if (is_balanced(k.t, all_edges(k.t)).balanced) k.curves.push_back(all_edges(k.t));
    for (const auto& c : k.curves)
      for (int trial = 0; trial < 20; ++trial) {
        const IntVector phi = oracle::random_vector(k.t.complex().vertex_count(), rng);
        CHECK(intersect_degree(k.t, div_vertex_function(k.t, {phi}), c).degree == 0);
      }
  }
}

TEST_CASE("intersection points do not depend on the germ chosen") {
  // shifting a defining germ by a linear germ leaves the slope sums on a balanced curve unchanged
  const auto t = support::structure("torus.json");
  Curve c;
  for (std::size_t e = 0; e < 3; ++e) c.add(e, 1);
  REQUIRE(is_balanced(t, c).balanced);
  std::mt19937 rng(1);
  for (std::size_t r = 0; r < t.ridge_count(); ++r) {
    const Divisor d = ridges({{r, 1}});
    const auto germ = defining_germ(t, d, 0);
    if (!germ) continue;
    const GermSpace g = germ_space(t, 0);
    for (int k = 0; k < 10; ++k) {
      RatVector shifted = *germ;
      for (const auto& b : g.basis) {
        const Rational s(oracle::random_vector(1, rng)[0]);
        for (std::size_t i = 0; i < shifted.size(); ++i) shifted[i] += s * b[i];
      }
      CHECK(slope_sum(t, c, 0, shifted) == slope_sum(t, c, 0, *germ));
    }
  }
}

TEST_CASE("restricting a linear germ to a balanced curve gives nothing at its base") {
  const auto star = support::structure("star-graph.json");
  Curve c;
  for (std::size_t e = 0; e < 3; ++e) c.add(e, 1);
  for (const auto& b : germ_space(star, 0).basis) CHECK(slope_sum(star, c, 0, b) == 0);
}
