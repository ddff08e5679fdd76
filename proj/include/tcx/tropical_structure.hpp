#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "tcx/delta_complex.hpp"
#include "tcx/exact.hpp"
#include "tcx/linalg.hpp"

namespace tcx {

/// One structure constant: the value attached to slot `slot` of ridge `ridge`.
struct AlphaEntry {
  std::size_t ridge = 0;
  int slot = 0;
  Integer value;

  friend bool operator==(const AlphaEntry&, const AlphaEntry&) = default;
};

/// A Delta-complex together with one integer per (ridge, vertex slot).
class TropicalStructure {
 public:
  /// Throws MissingAlpha when a (ridge, slot) pair has no entry, except for
  /// n = 1 where missing values default to the vertex degree.
  static TropicalStructure build(DeltaComplex complex, const std::vector<AlphaEntry>& entries);

  const DeltaComplex& complex() const noexcept { return *complex_; }
  int n() const noexcept { return complex_->n(); }
  std::size_t ridge_count() const { return alpha_.size(); }

  const Integer& alpha(std::size_t ridge, int slot) const;
  const Integer& alpha(const VertexSlot& vs) const { return alpha(vs.simplex.index, vs.slot); }

  /// All entries ordered by ridge then slot.
  std::vector<AlphaEntry> entries() const;

 private:
  std::shared_ptr<const DeltaComplex> complex_;
  std::vector<std::vector<Integer>> alpha_;
};

struct WeakViolation {
  std::size_t ridge = 0;
  Integer alpha_sum;
  std::size_t degree = 0;
};

struct WeakReport {
  std::vector<WeakViolation> violations;
  std::vector<std::size_t> zero_degree_ridges;

  bool pass() const noexcept { return violations.empty(); }
};

WeakReport check_weak(const TropicalStructure& structure);

struct LocalMatrix {
  SimplexId base;
  std::vector<LinkElement> index;  // link(base)_0 in enumeration order
  IntMatrix entries;
};

/// Throws WrongDimension unless n >= 2 and q has dimension n - 2.
LocalMatrix local_matrix(const TropicalStructure& structure, SimplexId q);

enum class Verdict { WeakOnly, Tropical };

struct LocalInertia {
  std::size_t base = 0;
  Inertia inertia;
};

struct Classification {
  Verdict verdict = Verdict::Tropical;
  std::vector<LocalInertia> per_base;  // ordered by base index
};

/// Throws WeakConstraintViolated if check_weak fails. `jobs` > 1 spreads the
/// per-base inertia computations across threads.
Classification classify(const TropicalStructure& structure, unsigned jobs = 1);

}  // namespace tcx
