#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "tcx/delta_complex.hpp"
#include "tcx/exact.hpp"
#include "tcx/pl_divisors.hpp"
#include "tcx/tropical_structure.hpp"

namespace tcx {

/// Vertex set plus ray generators of an unbounded cell.
struct UnboundedCell {
  std::vector<std::size_t> vertices;  // ascending
  std::vector<IntVector> rays;        // primitive, in Z^N, ascending

  int dimension() const noexcept { return static_cast<int>(vertices.size() + rays.size()) - 1; }
  friend bool operator==(const UnboundedCell&, const UnboundedCell&) = default;
};

struct SheetCount {
  std::vector<std::size_t> cell;
  std::size_t count = 1;
};

/// map[k] is the sheet of `face` under sheet k of `cell`.
struct FaceSheetMap {
  std::vector<std::size_t> cell;
  std::vector<std::size_t> face;
  std::vector<std::size_t> map;
};

struct EmbeddedInput {
  int ambient_dim = 0;
  std::vector<IntVector> vertices;  // length N, or N + 1 ending in 1
  std::vector<std::vector<std::size_t>> bounded_cells;
  std::vector<UnboundedCell> unbounded_cells;  // rays of length N, or N + 1 ending in 0
  std::vector<SheetCount> sheet_counts;
  std::vector<FaceSheetMap> face_sheet_maps;
};

/// A unimodular subdivision in R^N with sheet data on its bounded cells. Both
/// bounded and unbounded cells are closed under taking faces on load.
class EmbeddedComplex {
 public:
  /// Throws MalformedInput or InconsistentSheets.
  static EmbeddedComplex build(const EmbeddedInput& input);

  int ambient_dim() const noexcept { return ambient_dim_; }
  /// Dimension of the largest cell, bounded or not.
  int dim() const noexcept { return dim_; }

  /// Vertex i lifted to height 1.
  const IntVector& lifted(std::size_t vertex) const { return lifted_.at(vertex); }
  std::size_t vertex_count() const { return lifted_.size(); }

  /// The bounded cells as a simplicial complex; slots follow ascending vertex
  /// order.
  const DeltaComplex& bounded() const noexcept { return *bounded_; }
  const std::vector<UnboundedCell>& unbounded() const noexcept { return unbounded_; }

  std::size_t sheets(SimplexId cell) const;
  /// Sheet of the face d_i(cell) under `sheet` of `cell`.
  std::size_t face_sheet(SimplexId cell, int slot, std::size_t sheet) const;

 private:
  int ambient_dim_ = 0;
  int dim_ = 0;
  std::vector<IntVector> lifted_;
  std::shared_ptr<const DeltaComplex> bounded_;
  std::vector<UnboundedCell> unbounded_;
  std::vector<std::vector<std::size_t>> sheets_;                   // [dim][cell]
  std::vector<std::vector<std::vector<std::size_t>>> face_sheets_;  // [dim][cell][sheet * (dim + 1) + slot]
};

struct CellSheet {
  std::size_t cell = 0;
  std::size_t sheet = 0;

  friend auto operator<=>(const CellSheet&, const CellSheet&) = default;
};

/// One simplex per (bounded cell, sheet), ordered by cell then sheet.
struct Duplication {
  DeltaComplex complex;
  std::vector<std::vector<CellSheet>> projection;  // [dim][simplex]

  std::size_t simplex_of(int dim, CellSheet cs) const;
};

Duplication duplicate_sheets(const EmbeddedComplex& embedded);

struct BalancingSolution {
  std::size_t ridge = 0;
  std::size_t sheet = 0;
  IntVector coefficients;  // one per vertex of the ridge, ascending
  std::size_t adjacent = 0;  // facet sheets over this ridge sheet
};

/// Throws WrongDimension, NonUnimodular or NoSolution.
BalancingSolution alpha_from_balancing(const EmbeddedComplex& embedded, std::size_t ridge, std::size_t sheet = 0);

struct EmbeddedStructure {
  Duplication duplication;
  TropicalStructure structure;
};

/// Duplicated complex with structure constants from the balancing solves.
EmbeddedStructure structure_from_embedding(const EmbeddedComplex& embedded);

struct Robustness {
  bool robust = false;
  std::optional<RatVector> certificate;  // functional on R^N
  std::vector<IntVector> rays;           // rays of unbounded cells one dimension up
  std::optional<std::size_t> maximal_unbounded_cell;
};

Robustness robustness_check(const EmbeddedComplex& embedded, SimplexId cell);

/// Push-forward of a ridge-supported divisor on the duplicated complex, keyed
/// by bounded ridge cell; zero entries omitted.
std::map<std::size_t, Integer> push_forward(const Duplication& duplication, const Divisor& d);

/// Weight of div(f) on each bounded ridge cell, computed in the ambient lattice
/// from an affine extension of f over the ridge. Throws NotConstantOnUnbounded.
std::map<std::size_t, Integer> embedded_weights(const EmbeddedComplex& embedded, const IntVector& values);

struct PushForwardReport {
  std::map<std::size_t, Integer> pushed;
  std::optional<std::map<std::size_t, Integer>> pushed_div;
  std::optional<std::map<std::size_t, Integer>> weights;
  std::optional<bool> agree;
};

PushForwardReport push_forward_and_compare(const EmbeddedComplex& embedded, const Divisor& d,
                                           const std::optional<IntVector>& values);

}  // namespace tcx
