#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "tcx/exact.hpp"
#include "tcx/linalg.hpp"
#include "tcx/tropical_structure.hpp"

namespace tcx {

/// Integer values on the vertices of a complex, extended linearly over each
/// parametrizing simplex.
struct VertexFunction {
  IntVector values;

  friend bool operator==(const VertexFunction&, const VertexFunction&) = default;
};

/// A codimension-one cut {normal . x = offset} inside a facet, in the facet's
/// simplex coordinates (slot 0 at the origin, slot i at e_i).
struct FacetPiece {
  std::size_t facet = 0;
  IntVector normal;  // primitive
  Rational offset;
  Integer multiplicity;

  friend bool operator==(const FacetPiece&, const FacetPiece&) = default;
};

struct Divisor {
  std::map<std::size_t, Integer> ridge_part;  // zero coefficients are never stored
  std::vector<FacetPiece> facet_pieces;

  Integer coefficient(std::size_t ridge) const;
  void add(std::size_t ridge, const Integer& c);
  bool ridge_supported() const noexcept { return facet_pieces.empty(); }

  friend bool operator==(const Divisor&, const Divisor&) = default;
  friend Divisor operator+(const Divisor& a, const Divisor& b);
  friend Divisor operator-(const Divisor& a, const Divisor& b);
  friend Divisor operator*(const Integer& k, const Divisor& d);
};

/// Ridge-supported divisor from a dense coefficient vector.
Divisor divisor_from_coefficients(const IntVector& coefficients);
/// Dense coefficient vector over all ridges; throws NotRidgeSupported.
IntVector coefficient_vector(const TropicalStructure& structure, const Divisor& d);

/// Ridge-by-vertex matrix L with L * phi = coefficients of div(phi).
IntMatrix divisor_matrix(const TropicalStructure& structure);

Divisor div_vertex_function(const TropicalStructure& structure, const VertexFunction& phi);

/// Values of a function near a ridge: at each slot of the ridge and at opp(t)
/// for each t in link(ridge)_0, in enumeration order.
struct RidgeGerm {
  IntVector at_slots;
  IntVector at_opposites;
};

RidgeGerm restrict_to_ridge(const TropicalStructure& structure, std::size_t ridge, const VertexFunction& phi);

/// Throws IndexMismatch if the germ does not fit the ridge's slots and link.
Integer ridge_multiplicity(const TropicalStructure& structure, std::size_t ridge, const RidgeGerm& germ);

/// max{slope . x - offset, 0} on one facet, in simplex coordinates.
struct TwoPieceFunction {
  std::size_t facet = 0;
  IntVector slope;
  Rational offset;
};

/// Throws DegenerateCut unless the cut meets the facet in a codimension-one set.
Divisor div_two_piece(const TropicalStructure& structure, const TwoPieceFunction& f);

enum class CartierKind { Cartier, QCartier, Neither };

/// Values at opp(t) for t in link(base)_0 of a function vanishing on base.
struct LocalGerm {
  SimplexId base;
  RatVector values;
};

struct CartierResult {
  CartierKind kind = CartierKind::Neither;
  std::optional<LocalGerm> germ;  // integral when kind is Cartier
};

/// Right-hand side [D]_q: the coefficient of r(t) for each t in link(q)_0.
IntVector local_coefficients(const TropicalStructure& structure, const Divisor& d, SimplexId q);

/// Throws WrongDimension or NotRidgeSupported.
CartierResult local_cartier_test(const TropicalStructure& structure, const Divisor& d, SimplexId q);

struct WeilReport {
  bool weil = true;
  std::vector<CartierResult> per_base;  // indexed by (n-2)-simplex
  std::vector<std::size_t> failing;
};

WeilReport weil_test(const TropicalStructure& structure, const Divisor& d, unsigned jobs = 1);

/// Z^ridges / image(L), presented through the Smith form of L.
class ClassGroupPresentation {
 public:
  explicit ClassGroupPresentation(const IntMatrix& divisor_matrix);

  /// Invariant factors greater than one, ascending.
  const IntVector& invariant_factors() const noexcept { return torsion_; }
  /// All nonzero Smith diagonal entries, ones included.
  const IntVector& smith_diagonal() const noexcept { return snf_.diagonal; }
  std::size_t free_rank() const noexcept { return snf_.rows - snf_.rank(); }

  /// Coordinates of a class: residues mod each torsion factor, then free part.
  IntVector class_of(const IntVector& coefficients) const;
  bool is_principal(const IntVector& coefficients) const;
  /// Order of the class, or nullopt when it has infinite order.
  std::optional<Integer> order(const IntVector& coefficients) const;

  const SmithForm& smith() const noexcept { return snf_; }

 private:
  SmithForm snf_;
  IntVector torsion_;
  std::size_t first_torsion_ = 0;
};

ClassGroupPresentation class_group(const TropicalStructure& structure);

struct EquivalenceResult {
  std::optional<VertexFunction> witness;
  IntVector difference_class;     // class_of(D - D') when no witness exists
  std::optional<Integer> order;   // order of that class; nullopt is infinite
};

/// Witness phi with div(phi) = D - D', shifted so its minimum is 0.
EquivalenceResult lin_equiv_witness(const TropicalStructure& structure, const Divisor& d, const Divisor& other);

}  // namespace tcx
