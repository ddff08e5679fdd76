#include "tcx/delta_complex.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <string>

#include "tcx/error.hpp"

namespace tcx {

namespace {

// All ascending subsets of {0..d} with `size` elements, in lexicographic order.
std::vector<std::vector<int>> combinations(int d, int size) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int next) -> void {
    if (static_cast<int>(cur.size()) == size) {
      out.push_back(cur);
      return;
    }
    for (int x = next; x <= d; ++x) {
      if (d - x + 1 < size - static_cast<int>(cur.size())) break;
      cur.push_back(x);
      self(self, x + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

std::string describe(SimplexId s) {
  std::ostringstream os;
  os << "simplex (dim " << s.dim << ", index " << s.index << ")";
  return os.str();
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

std::vector<int> LinkElement::complement() const {
  std::vector<int> out;
  std::size_t k = 0;
  for (int slot = 0; slot <= coface.dim; ++slot) {
    if (k < inclusion.size() && inclusion[k] == slot) {
      ++k;
      continue;
    }
    out.push_back(slot);
  }
  return out;
}

RawComplex raw_from_simplices(int n, const std::vector<std::vector<std::size_t>>& simplices) {
  std::vector<std::set<std::vector<std::size_t>>> by_dim(static_cast<std::size_t>(n) + 1);
  for (auto s : simplices) {
    std::sort(s.begin(), s.end());
    if (s.empty() || std::adjacent_find(s.begin(), s.end()) != s.end())
      throw Error(ErrorCode::MalformedInput, "simplex vertex lists must be nonempty and distinct");
    const int d = static_cast<int>(s.size()) - 1;
    if (d > n) throw Error(ErrorCode::DimensionExceeded, "simplex of dimension " + std::to_string(d));
    for (int k = 0; k <= d; ++k)
      for (const auto& sub : combinations(d, k + 1)) {
        std::vector<std::size_t> face;
        for (int i : sub) face.push_back(s[static_cast<std::size_t>(i)]);
        by_dim[static_cast<std::size_t>(k)].insert(face);
      }
  }
  RawComplex raw;
  raw.n = n;
  std::vector<std::map<std::vector<std::size_t>, std::size_t>> index(by_dim.size());
  for (std::size_t d = 0; d < by_dim.size(); ++d) {
    raw.counts.push_back(by_dim[d].size());
    std::size_t i = 0;
    for (const auto& s : by_dim[d]) index[d][s] = i++;
  }
  while (raw.counts.size() > 1 && raw.counts.back() == 0) raw.counts.pop_back();
  for (std::size_t d = 1; d < by_dim.size(); ++d)
    for (const auto& s : by_dim[d]) {
      for (std::size_t i = 0; i <= d; ++i) {
        auto face = s;
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
        raw.faces.push_back({static_cast<int>(d), index[d].at(s), static_cast<int>(i), index[d - 1].at(face)});
      }
    }
  return raw;
}

DeltaComplex DeltaComplex::build(const RawComplex& raw) {
  if (raw.n < 0) throw Error(ErrorCode::MalformedInput, "dimension bound n must be non-negative");
  for (std::size_t d = static_cast<std::size_t>(raw.n) + 1; d < raw.counts.size(); ++d)
    if (raw.counts[d] != 0)
      throw Error(ErrorCode::DimensionExceeded,
                  std::to_string(raw.counts[d]) + " simplices of dimension " + std::to_string(d) +
                      " exceed n = " + std::to_string(raw.n));

  DeltaComplex x;
  x.n_ = raw.n;
  x.counts_.assign(static_cast<std::size_t>(raw.n) + 1, 0);
  for (std::size_t d = 0; d < raw.counts.size() && d < x.counts_.size(); ++d) x.counts_[d] = raw.counts[d];
  if (x.counts_[0] == 0) throw Error(ErrorCode::Disconnected, "complex has no vertices");

  x.faces_.resize(x.counts_.size());
  std::vector<std::vector<bool>> seen(x.counts_.size());
  for (std::size_t d = 1; d < x.counts_.size(); ++d) {
    x.faces_[d].assign(x.counts_[d] * (d + 1), npos);
    seen[d].assign(x.counts_[d] * (d + 1), false);
  }
  for (const auto& f : raw.faces) {
    if (f.dim > raw.n) throw Error(ErrorCode::DimensionExceeded, "face entry for dimension " + std::to_string(f.dim));
    if (f.dim < 1) throw Error(ErrorCode::MalformedInput, "face entries need dimension >= 1");
    const auto d = static_cast<std::size_t>(f.dim);
    if (f.index >= x.counts_[d]) throw Error(ErrorCode::MalformedInput, "face entry for missing " + describe({f.dim, f.index}));
    if (f.slot < 0 || f.slot > f.dim) throw Error(ErrorCode::MalformedInput, "face slot out of range for " + describe({f.dim, f.index}));
    if (f.target >= x.counts_[d - 1])
      throw Error(ErrorCode::MalformedInput, "face target out of range for " + describe({f.dim, f.index}));
    const std::size_t pos = f.index * (d + 1) + static_cast<std::size_t>(f.slot);
    if (seen[d][pos]) throw Error(ErrorCode::MalformedInput, "duplicate face entry for " + describe({f.dim, f.index}));
    seen[d][pos] = true;
    x.faces_[d][pos] = f.target;
  }
  for (std::size_t d = 1; d < x.counts_.size(); ++d)
    for (std::size_t p = 0; p < seen[d].size(); ++p)
      if (!seen[d][p])
        throw Error(ErrorCode::MalformedInput, "missing face " + std::to_string(p % (d + 1)) + " of " +
                                                   describe({static_cast<int>(d), p / (d + 1)}));

  // d_i d_j = d_{j-1} d_i for i < j
  for (std::size_t d = 2; d < x.counts_.size(); ++d)
    for (std::size_t s = 0; s < x.counts_[d]; ++s) {
      const SimplexId sid{static_cast<int>(d), s};
      for (int j = 1; j <= static_cast<int>(d); ++j)
        for (int i = 0; i < j; ++i) {
          const std::size_t lhs = x.face({static_cast<int>(d) - 1, x.face(sid, j)}, i);
          const std::size_t rhs = x.face({static_cast<int>(d) - 1, x.face(sid, i)}, j - 1);
          if (lhs != rhs)
            throw Error(ErrorCode::SimplicialIdentityViolation,
                        describe(sid) + ", i = " + std::to_string(i) + ", j = " + std::to_string(j));
        }
    }

  x.compute_vertices();

  UnionFind uf(x.counts_[0]);
  if (x.counts_.size() > 1)
    for (std::size_t e = 0; e < x.counts_[1]; ++e) uf.unite(x.faces_[1][2 * e], x.faces_[1][2 * e + 1]);
  for (std::size_t v = 1; v < x.counts_[0]; ++v)
    if (uf.find(v) != uf.find(0))
      throw Error(ErrorCode::Disconnected, "vertex " + std::to_string(v) + " is not connected to vertex 0");

  x.compute_links();
  return x;
}

std::size_t DeltaComplex::count(int dim) const {
  if (dim < 0 || dim >= static_cast<int>(counts_.size())) return 0;
  return counts_[static_cast<std::size_t>(dim)];
}

std::size_t DeltaComplex::face(SimplexId s, int i) const {
  const auto d = static_cast<std::size_t>(s.dim);
  return faces_[d][s.index * (d + 1) + static_cast<std::size_t>(i)];
}

std::size_t DeltaComplex::face_of(SimplexId s, const std::vector<int>& slots) const {
  // drop the unwanted slots from the top so lower slot numbers stay valid
  SimplexId cur = s;
  std::size_t k = slots.size();
  for (int j = s.dim; j >= 0; --j) {
    if (k > 0 && slots[k - 1] == j) {
      --k;
      continue;
    }
    cur = {cur.dim - 1, face(cur, j)};
  }
  return cur.index;
}

const std::vector<std::size_t>& DeltaComplex::vertices(SimplexId s) const {
  return vertices_.at(static_cast<std::size_t>(s.dim)).at(s.index);
}

void DeltaComplex::compute_vertices() {
  vertices_.resize(counts_.size());
  vertices_[0].resize(counts_[0]);
  for (std::size_t v = 0; v < counts_[0]; ++v) vertices_[0][v] = {v};
  for (std::size_t d = 1; d < counts_.size(); ++d) {
    vertices_[d].resize(counts_[d]);
    for (std::size_t s = 0; s < counts_[d]; ++s) {
      // slots 0..d-1 survive in d_d, slot d is the last vertex of d_0
      const SimplexId sid{static_cast<int>(d), s};
      auto verts = vertices_[d - 1][face(sid, static_cast<int>(d))];
      verts.push_back(vertices_[d - 1][face(sid, 0)].back());
      std::vector<std::size_t> sorted = verts;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) regular_ = false;
      vertices_[d][s] = std::move(verts);
    }
  }
}

void DeltaComplex::compute_links() {
  links_.resize(counts_.size());
  link_vertex_lookup_.resize(counts_.size());
  for (std::size_t k = 0; k < counts_.size(); ++k) {
    links_[k].resize(counts_[k]);
    link_vertex_lookup_[k].resize(counts_[k]);
  }

  for (std::size_t d = 1; d < counts_.size(); ++d) {
    std::vector<std::vector<std::vector<int>>> subsets(d);
    for (std::size_t k = 0; k < d; ++k) subsets[k] = combinations(static_cast<int>(d), static_cast<int>(k) + 1);
    for (std::size_t c = 0; c < counts_[d]; ++c) {
      const SimplexId cid{static_cast<int>(d), c};
      for (std::size_t k = 0; k < d; ++k)
        for (const auto& sub : subsets[k]) {
          const SimplexId base{static_cast<int>(k), face_of(cid, sub)};
          auto& link = links_[k][base.index];
          const std::size_t m = d - k - 1;
          if (link.elements.size() <= m) link.elements.resize(m + 1);
          link.elements[m].push_back({base, cid, sub});
        }
    }
  }

  for (std::size_t k = 0; k < counts_.size(); ++k)
    for (std::size_t s = 0; s < counts_[k]; ++s) {
      Link& link = links_[k][s];
      if (link.elements.empty()) link.elements.resize(1);
      link.faces.resize(link.elements.size());
      std::vector<std::map<std::pair<std::size_t, std::vector<int>>, std::size_t>> where(link.elements.size());
      for (std::size_t m = 0; m < link.elements.size(); ++m)
        for (std::size_t e = 0; e < link.elements[m].size(); ++e)
          where[m][{link.elements[m][e].coface.index, link.elements[m][e].inclusion}] = e;
      link_vertex_lookup_[k][s] = where[0];
      for (std::size_t m = 1; m < link.elements.size(); ++m) {
        link.faces[m].resize(link.elements[m].size());
        for (std::size_t e = 0; e < link.elements[m].size(); ++e) {
          const LinkElement& el = link.elements[m][e];
          for (int drop : el.complement()) {
            std::vector<int> inc;
            for (int slot : el.inclusion) inc.push_back(slot > drop ? slot - 1 : slot);
            const std::size_t f = face(el.coface, drop);
            link.faces[m][e].push_back(where[m - 1].at({f, inc}));
          }
        }
      }
    }
}

const Link& DeltaComplex::link(SimplexId s) const {
  return links_.at(static_cast<std::size_t>(s.dim)).at(s.index);
}

VertexSlot DeltaComplex::opposite(const LinkElement& t) { return {t.coface, t.complement().front()}; }

std::size_t DeltaComplex::link_vertex_index(SimplexId base, std::size_t coface,
                                            const std::vector<int>& inclusion) const {
  const auto& lookup = link_vertex_lookup_.at(static_cast<std::size_t>(base.dim)).at(base.index);
  auto it = lookup.find({coface, inclusion});
  return it == lookup.end() ? npos : it->second;
}

RawComplex DeltaComplex::raw() const {
  RawComplex r;
  r.n = n_;
  r.counts = counts_;
  while (r.counts.size() > 1 && r.counts.back() == 0) r.counts.pop_back();
  for (std::size_t d = 1; d < counts_.size(); ++d)
    for (std::size_t s = 0; s < counts_[d]; ++s)
      for (std::size_t i = 0; i <= d; ++i)
        r.faces.push_back({static_cast<int>(d), s, static_cast<int>(i), faces_[d][s * (d + 1) + i]});
  return r;
}

}  // namespace tcx
