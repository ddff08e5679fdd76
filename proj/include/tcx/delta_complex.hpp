#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace tcx {

/// A simplex of a Delta-complex: dimension plus dense index within that
/// dimension.
struct SimplexId {
  int dim = 0;
  std::size_t index = 0;

  friend auto operator<=>(const SimplexId&, const SimplexId&) = default;
};

/// A vertex of the parametrizing simplex of `simplex`, by slot 0..dim.
struct VertexSlot {
  SimplexId simplex;
  int slot = 0;

  friend auto operator<=>(const VertexSlot&, const VertexSlot&) = default;
};

/// One way of seeing `base` as a face of `coface`. `inclusion[i]` is the slot
/// of the coface's parametrizing simplex that hosts slot i of the base, so the
/// inclusion is strictly increasing.
struct LinkElement {
  SimplexId base;
  SimplexId coface;
  std::vector<int> inclusion;

  int dimension() const noexcept { return coface.dim - base.dim - 1; }
  /// Coface slots outside the identified face, ascending.
  std::vector<int> complement() const;
};

/// link(s) split by link dimension. For m >= 1, `faces[m][e][j]` is the index
/// in `elements[m - 1]` of the j-th face of element e, where faces are taken
/// by dropping the complement slots in ascending order.
struct Link {
  std::vector<std::vector<LinkElement>> elements;
  std::vector<std::vector<std::vector<std::size_t>>> faces;

  const std::vector<LinkElement>& vertices() const { return elements.at(0); }
  std::size_t size(int m) const {
    return m < static_cast<int>(elements.size()) ? elements[static_cast<std::size_t>(m)].size() : 0;
  }
};

struct FaceEntry {
  int dim = 0;
  std::size_t index = 0;
  int slot = 0;
  std::size_t target = 0;

  friend auto operator<=>(const FaceEntry&, const FaceEntry&) = default;
};

/// Textual description of a complex: dimension bound, per-dimension counts and
/// every face-map entry.
struct RawComplex {
  int n = 0;
  std::vector<std::size_t> counts;
  std::vector<FaceEntry> faces;

  friend bool operator==(const RawComplex&, const RawComplex&) = default;
};

/// Closes a list of vertex sets under taking faces and emits the face tables of
/// the resulting (regular) simplicial complex. Simplices are ordered per
/// dimension by their sorted vertex lists.
RawComplex raw_from_simplices(int n, const std::vector<std::vector<std::size_t>>& simplices);

/// Immutable, validated finite Delta-complex. Non-regular gluings are encoded
/// by the face tables; links are computed at build time.
class DeltaComplex {
 public:
  static DeltaComplex build(const RawComplex& raw);

  int n() const noexcept { return n_; }
  std::size_t count(int dim) const;
  std::size_t vertex_count() const { return count(0); }

  /// Index of the (dim-1)-simplex d_i(s).
  std::size_t face(SimplexId s, int i) const;
  /// Face of s spanned by the given ascending slots.
  std::size_t face_of(SimplexId s, const std::vector<int>& slots) const;

  /// Image vertex of each slot of s.
  const std::vector<std::size_t>& vertices(SimplexId s) const;
  std::size_t vertex(const VertexSlot& vs) const { return vertices(vs.simplex)[static_cast<std::size_t>(vs.slot)]; }

  /// No simplex has two slots glued to the same vertex.
  bool is_regular() const noexcept { return regular_; }

  const Link& link(SimplexId s) const;
  /// Cardinality of link(s)_0.
  std::size_t degree(SimplexId s) const { return link(s).size(0); }

  /// opp(t) for a 0-dimensional link element.
  static VertexSlot opposite(const LinkElement& t);

  /// Index of a 0-dimensional element of link(base) given coface and
  /// inclusion, or npos.
  std::size_t link_vertex_index(SimplexId base, std::size_t coface, const std::vector<int>& inclusion) const;

  RawComplex raw() const;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  int n_ = 0;
  bool regular_ = true;
  std::vector<std::size_t> counts_;
  // faces_[d][index * (d + 1) + i]
  std::vector<std::vector<std::size_t>> faces_;
  std::vector<std::vector<std::vector<std::size_t>>> vertices_;
  std::vector<std::vector<Link>> links_;
  // (base dim, base index, coface index, inclusion) -> position in link(base)_0
  std::vector<std::vector<std::map<std::pair<std::size_t, std::vector<int>>, std::size_t>>> link_vertex_lookup_;

  void compute_vertices();
  void compute_links();
};

}  // namespace tcx
