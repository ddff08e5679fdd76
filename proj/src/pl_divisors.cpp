#include "tcx/pl_divisors.hpp"

#include <algorithm>
#include <string>

#include "tcx/error.hpp"
#include "tcx/parallel.hpp"

namespace tcx {

Integer Divisor::coefficient(std::size_t ridge) const {
  auto it = ridge_part.find(ridge);
  return it == ridge_part.end() ? Integer(0) : it->second;
}

void Divisor::add(std::size_t ridge, const Integer& c) {
  if (c == 0) return;
  Integer& slot = ridge_part[ridge];
  slot += c;
  if (slot == 0) ridge_part.erase(ridge);
}

Divisor operator+(const Divisor& a, const Divisor& b) {
  Divisor out = a;
  for (const auto& [r, c] : b.ridge_part) out.add(r, c);
  out.facet_pieces.insert(out.facet_pieces.end(), b.facet_pieces.begin(), b.facet_pieces.end());
  return out;
}

Divisor operator*(const Integer& k, const Divisor& d) {
  Divisor out;
  for (const auto& [r, c] : d.ridge_part) out.add(r, k * c);
  if (k != 0)
    for (auto piece : d.facet_pieces) {
      piece.multiplicity *= k;
      out.facet_pieces.push_back(piece);
    }
  return out;
}

Divisor operator-(const Divisor& a, const Divisor& b) { return a + Integer(-1) * b; }

Divisor divisor_from_coefficients(const IntVector& coefficients) {
  Divisor d;
  for (std::size_t r = 0; r < coefficients.size(); ++r) d.add(r, coefficients[r]);
  return d;
}

IntVector coefficient_vector(const TropicalStructure& structure, const Divisor& d) {
  if (!d.ridge_supported()) throw Error(ErrorCode::NotRidgeSupported, "divisor has facet-interior pieces");
  IntVector out(structure.ridge_count());
  for (const auto& [r, c] : d.ridge_part) {
    if (r >= out.size()) throw Error(ErrorCode::IndexMismatch, "divisor names ridge " + std::to_string(r));
    out[r] = c;
  }
  return out;
}

IntMatrix divisor_matrix(const TropicalStructure& structure) {
  const DeltaComplex& x = structure.complex();
  const int n = structure.n();
  IntMatrix l(structure.ridge_count(), x.vertex_count());
  for (std::size_t r = 0; r < structure.ridge_count(); ++r) {
    const SimplexId rid{n - 1, r};
    for (const auto& t : x.link(rid).vertices()) l(r, x.vertex(DeltaComplex::opposite(t))) += 1;
    for (int i = 0; i < n; ++i) l(r, x.vertex({rid, i})) -= structure.alpha(r, i);
  }
  return l;
}

Divisor div_vertex_function(const TropicalStructure& structure, const VertexFunction& phi) {
  if (phi.values.size() != structure.complex().vertex_count())
    throw Error(ErrorCode::IndexMismatch, "function has " + std::to_string(phi.values.size()) + " values for " +
                                              std::to_string(structure.complex().vertex_count()) + " vertices");
  return divisor_from_coefficients(divisor_matrix(structure).apply(phi.values));
}

RidgeGerm restrict_to_ridge(const TropicalStructure& structure, std::size_t ridge, const VertexFunction& phi) {
  const DeltaComplex& x = structure.complex();
  const SimplexId rid{structure.n() - 1, ridge};
  RidgeGerm g;
  for (auto v : x.vertices(rid)) g.at_slots.push_back(phi.values.at(v));
  for (const auto& t : x.link(rid).vertices()) g.at_opposites.push_back(phi.values.at(x.vertex(DeltaComplex::opposite(t))));
  return g;
}

Integer ridge_multiplicity(const TropicalStructure& structure, std::size_t ridge, const RidgeGerm& germ) {
  const int n = structure.n();
  if (n < 1 || ridge >= structure.ridge_count()) throw Error(ErrorCode::IndexMismatch, "no ridge " + std::to_string(ridge));
  const std::size_t deg = structure.complex().degree({n - 1, ridge});
  if (germ.at_slots.size() != static_cast<std::size_t>(n) || germ.at_opposites.size() != deg)
    throw Error(ErrorCode::IndexMismatch, "germ shape does not match ridge " + std::to_string(ridge));
  Integer m = 0;
  for (const auto& v : germ.at_opposites) m += v;
  for (int i = 0; i < n; ++i) m -= structure.alpha(ridge, i) * germ.at_slots[static_cast<std::size_t>(i)];
  return m;
}

Divisor div_two_piece(const TropicalStructure& structure, const TwoPieceFunction& f) {
  const int n = structure.n();
  if (f.facet >= structure.complex().count(n)) throw Error(ErrorCode::IndexMismatch, "no facet " + std::to_string(f.facet));
  if (f.slope.size() != static_cast<std::size_t>(n))
    throw Error(ErrorCode::IndexMismatch, "slope needs " + std::to_string(n) + " entries");
  const Integer g = gcd_of(f.slope);
  if (g == 0) throw Error(ErrorCode::DegenerateCut, "zero slope has no cut");

  std::vector<Rational> at_vertices{-f.offset};
  for (const auto& s : f.slope) at_vertices.push_back(Rational(s) - f.offset);
  const bool negative = std::any_of(at_vertices.begin(), at_vertices.end(), [](const Rational& h) { return h < 0; });
  const bool positive = std::any_of(at_vertices.begin(), at_vertices.end(), [](const Rational& h) { return h > 0; });
  const auto zeros = std::count_if(at_vertices.begin(), at_vertices.end(), [](const Rational& h) { return h == 0; });
  // the cut either crosses the open facet or runs along one of its ridges on
  // the side where the function is nonzero
  const bool crosses = negative && positive;
  const bool along_ridge = !negative && positive && zeros == n;
  if (!crosses && !along_ridge) throw Error(ErrorCode::DegenerateCut, "cut does not meet facet " + std::to_string(f.facet));

  FacetPiece piece{f.facet, {}, f.offset / Rational(g), g};
  for (const auto& s : f.slope) piece.normal.push_back(s / g);
  Divisor d;
  d.facet_pieces.push_back(std::move(piece));
  return d;
}

IntVector local_coefficients(const TropicalStructure& structure, const Divisor& d, SimplexId q) {
  IntVector b;
  for (const auto& t : structure.complex().link(q).vertices()) b.push_back(d.coefficient(t.coface.index));
  return b;
}

CartierResult local_cartier_test(const TropicalStructure& structure, const Divisor& d, SimplexId q) {
  if (!d.ridge_supported()) throw Error(ErrorCode::NotRidgeSupported, "divisor has facet-interior pieces");
  const LocalMatrix m = local_matrix(structure, q);
  const IntVector b = local_coefficients(structure, d, q);
  const auto rational = solve_rational(to_rational(m.entries), to_rational(b));
  if (!rational) return {};
  if (const auto integral = solve_integral(m.entries, b))
    return {CartierKind::Cartier, LocalGerm{q, to_rational(*integral)}};
  return {CartierKind::QCartier, LocalGerm{q, *rational}};
}

WeilReport weil_test(const TropicalStructure& structure, const Divisor& d, unsigned jobs) {
  WeilReport report;
  const int n = structure.n();
  if (!d.ridge_supported()) throw Error(ErrorCode::NotRidgeSupported, "divisor has facet-interior pieces");
  if (n < 2) return report;
  const std::size_t count = structure.complex().count(n - 2);
  report.per_base.resize(count);
  parallel_for(count, jobs, [&](std::size_t q) { report.per_base[q] = local_cartier_test(structure, d, {n - 2, q}); });
  for (std::size_t q = 0; q < count; ++q)
    if (report.per_base[q].kind == CartierKind::Neither) report.failing.push_back(q);
  report.weil = report.failing.empty();
  return report;
}

ClassGroupPresentation::ClassGroupPresentation(const IntMatrix& l) : snf_(smith_normal_form(l)) {
  first_torsion_ = snf_.rank();
  for (std::size_t i = 0; i < snf_.rank(); ++i)
    if (snf_.diagonal[i] > 1) {
      if (torsion_.empty()) first_torsion_ = i;
      torsion_.push_back(snf_.diagonal[i]);
    }
}

IntVector ClassGroupPresentation::class_of(const IntVector& coefficients) const {
  if (coefficients.size() != snf_.rows) throw Error(ErrorCode::IndexMismatch, "coefficient vector has the wrong length");
  const IntVector y = snf_.u.apply(coefficients);
  IntVector out;
  for (std::size_t i = first_torsion_; i < snf_.rank(); ++i) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), y[i].get_mpz_t(), snf_.diagonal[i].get_mpz_t());
    out.push_back(r);
  }
  for (std::size_t i = snf_.rank(); i < snf_.rows; ++i) out.push_back(y[i]);
  return out;
}

bool ClassGroupPresentation::is_principal(const IntVector& coefficients) const {
  const IntVector c = class_of(coefficients);
  return std::all_of(c.begin(), c.end(), [](const Integer& x) { return x == 0; });
}

std::optional<Integer> ClassGroupPresentation::order(const IntVector& coefficients) const {
  const IntVector c = class_of(coefficients);
  for (std::size_t i = torsion_.size(); i < c.size(); ++i)
    if (c[i] != 0) return std::nullopt;
  Integer ord = 1;
  for (std::size_t i = 0; i < torsion_.size(); ++i) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), c[i].get_mpz_t(), torsion_[i].get_mpz_t());
    ord = lcm(ord, torsion_[i] / g);
  }
  return ord;
}

ClassGroupPresentation class_group(const TropicalStructure& structure) {
  return ClassGroupPresentation(divisor_matrix(structure));
}

EquivalenceResult lin_equiv_witness(const TropicalStructure& structure, const Divisor& d, const Divisor& other) {
  const IntVector diff = coefficient_vector(structure, d - other);
  const ClassGroupPresentation group = class_group(structure);
  EquivalenceResult result;
  if (auto phi = solve_integral(group.smith(), diff)) {
    if (!phi->empty()) {
      const Integer low = *std::min_element(phi->begin(), phi->end());
      for (auto& v : *phi) v -= low;
    }
    result.witness = VertexFunction{std::move(*phi)};
    return result;
  }
  result.difference_class = group.class_of(diff);
  result.order = group.order(diff);
  return result;
}

}  // namespace tcx
