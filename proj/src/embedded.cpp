#include "tcx/embedded.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "tcx/error.hpp"
#include "tcx/fourier_motzkin.hpp"
#include "tcx/linalg.hpp"

namespace tcx {

namespace {

std::string show(const std::vector<std::size_t>& cell) {
  std::string s = "{";
  for (std::size_t i = 0; i < cell.size(); ++i) s += (i ? "," : "") + std::to_string(cell[i]);
  return s + "}";
}

IntVector lift(const IntVector& point, int ambient, const Integer& height, const char* what) {
  const auto n = static_cast<std::size_t>(ambient);
  if (point.size() == n) {
    IntVector out = point;
    out.push_back(height);
    return out;
  }
  if (point.size() == n + 1 && point.back() == height) return point;
  throw Error(ErrorCode::MalformedInput, std::string(what) + " must have " + std::to_string(n) + " coordinates (or " +
                                             std::to_string(n + 1) + " ending in " + height.get_str() + ")");
}

// Every subset of `items` with at least one element, each ascending.
template <typename T>
std::vector<std::vector<T>> nonempty_subsets(const std::vector<T>& items) {
  std::vector<std::vector<T>> out;
  const std::size_t total = std::size_t{1} << items.size();
  for (std::size_t mask = 1; mask < total; ++mask) {
    std::vector<T> sub;
    for (std::size_t i = 0; i < items.size(); ++i)
      if (mask & (std::size_t{1} << i)) sub.push_back(items[i]);
    out.push_back(std::move(sub));
  }
  return out;
}

// Columns generate a saturated sublattice of full column rank.
bool unimodular(const std::vector<IntVector>& columns) {
  if (columns.empty()) return true;
  IntMatrix m(columns.front().size(), columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j)
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, j) = columns[j][i];
  const SmithForm snf = smith_normal_form(m);
  if (snf.rank() != columns.size()) return false;
  return std::all_of(snf.diagonal.begin(), snf.diagonal.end(), [](const Integer& d) { return d == 1; });
}

std::vector<std::size_t> vertex_list(const DeltaComplex& x, SimplexId s) { return x.vertices(s); }

}  // namespace

EmbeddedComplex EmbeddedComplex::build(const EmbeddedInput& input) {
  EmbeddedComplex e;
  if (input.ambient_dim < 1) throw Error(ErrorCode::MalformedInput, "ambient dimension N must be positive");
  e.ambient_dim_ = input.ambient_dim;
  if (input.vertices.empty()) throw Error(ErrorCode::MalformedInput, "no vertices");
  for (const auto& v : input.vertices) e.lifted_.push_back(lift(v, input.ambient_dim, 1, "vertices"));
  const std::size_t nv = e.lifted_.size();

  auto checked_cell = [nv](std::vector<std::size_t> cell, const char* what) {
    std::sort(cell.begin(), cell.end());
    if (cell.empty() || std::adjacent_find(cell.begin(), cell.end()) != cell.end() || cell.back() >= nv)
      throw Error(ErrorCode::MalformedInput, std::string(what) + " " + show(cell) + " needs distinct, existing vertices");
    return cell;
  };

  std::vector<std::vector<std::size_t>> simplices;
  int dim = 0;
  for (std::size_t v = 0; v < nv; ++v) simplices.push_back({v});
  for (const auto& c : input.bounded_cells) {
    simplices.push_back(checked_cell(c, "bounded cell"));
    dim = std::max(dim, static_cast<int>(c.size()) - 1);
  }

  std::set<std::pair<std::vector<std::size_t>, std::vector<IntVector>>> seen;
  std::vector<UnboundedCell> given;
  for (const auto& u : input.unbounded_cells) {
    UnboundedCell cell{checked_cell(u.vertices, "unbounded cell"), {}};
    if (u.rays.empty()) throw Error(ErrorCode::MalformedInput, "unbounded cell " + show(cell.vertices) + " has no rays");
    for (const auto& r : u.rays) {
      IntVector ray = lift(r, input.ambient_dim, 0, "rays");
      ray.pop_back();
      if (gcd_of(ray) != 1) throw Error(ErrorCode::MalformedInput, "ray of unbounded cell " + show(cell.vertices) + " is not primitive");
      cell.rays.push_back(std::move(ray));
    }
    std::sort(cell.rays.begin(), cell.rays.end());
    if (std::adjacent_find(cell.rays.begin(), cell.rays.end()) != cell.rays.end())
      throw Error(ErrorCode::MalformedInput, "repeated ray in unbounded cell " + show(cell.vertices));
    dim = std::max(dim, cell.dimension());
    if (seen.insert({cell.vertices, cell.rays}).second) {
      e.unbounded_.push_back(cell);
      given.push_back(std::move(cell));
    }
  }
  std::set<std::pair<std::vector<std::size_t>, std::vector<IntVector>>> faces;
  for (const auto& cell : given)
    for (const auto& vs : nonempty_subsets(cell.vertices))
      for (const auto& rs : nonempty_subsets(cell.rays))
        if (!seen.count({vs, rs})) faces.insert({vs, rs});
  for (const auto& [vs, rs] : faces) e.unbounded_.push_back({vs, rs});

  e.dim_ = dim;
  e.bounded_ = std::make_shared<const DeltaComplex>(DeltaComplex::build(raw_from_simplices(dim, simplices)));
  const DeltaComplex& x = *e.bounded_;

  std::map<std::vector<std::size_t>, SimplexId> by_vertices;
  for (int d = 0; d <= dim; ++d)
    for (std::size_t i = 0; i < x.count(d); ++i) by_vertices[x.vertices({d, i})] = {d, i};
  auto locate = [&](std::vector<std::size_t> cell) {
    std::sort(cell.begin(), cell.end());
    auto it = by_vertices.find(cell);
    if (it == by_vertices.end()) throw Error(ErrorCode::MalformedInput, "sheet data names unknown cell " + show(cell));
    return it->second;
  };

  e.sheets_.resize(static_cast<std::size_t>(dim) + 1);
  for (int d = 0; d <= dim; ++d) e.sheets_[static_cast<std::size_t>(d)].assign(x.count(d), 1);
  for (const auto& sc : input.sheet_counts) {
    const SimplexId id = locate(sc.cell);
    if (sc.count == 0) throw Error(ErrorCode::InconsistentSheets, "cell " + show(sc.cell) + " needs a positive sheet count");
    e.sheets_[static_cast<std::size_t>(id.dim)][id.index] = sc.count;
  }

  std::map<std::pair<SimplexId, SimplexId>, const FaceSheetMap*> maps;
  for (const auto& fm : input.face_sheet_maps) {
    const SimplexId cell = locate(fm.cell);
    const SimplexId face = locate(fm.face);
    const auto& outer = x.vertices(cell);
    const auto& inner = x.vertices(face);
    if (face.dim != cell.dim - 1 || !std::includes(outer.begin(), outer.end(), inner.begin(), inner.end()))
      throw Error(ErrorCode::InconsistentSheets, show(fm.face) + " is not a facet of " + show(fm.cell));
    if (!maps.emplace(std::make_pair(cell, face), &fm).second)
      throw Error(ErrorCode::InconsistentSheets, "two sheet maps for " + show(fm.cell) + " -> " + show(fm.face));
  }

  e.face_sheets_.resize(static_cast<std::size_t>(dim) + 1);
  for (int d = 1; d <= dim; ++d) {
    auto& table = e.face_sheets_[static_cast<std::size_t>(d)];
    table.resize(x.count(d));
    for (std::size_t c = 0; c < x.count(d); ++c) {
      const SimplexId cell{d, c};
      const std::size_t own = e.sheets(cell);
      table[c].assign(own * static_cast<std::size_t>(d + 1), 0);
      for (int i = 0; i <= d; ++i) {
        const SimplexId face{d - 1, x.face(cell, i)};
        const std::size_t target = e.sheets(face);
        auto it = maps.find({cell, face});
        if (it == maps.end()) {
          if (target != 1)
            throw Error(ErrorCode::InconsistentSheets, "missing sheet map " + show(vertex_list(x, cell)) + " -> " +
                                                           show(vertex_list(x, face)));
          continue;
        }
        const auto& map = it->second->map;
        if (map.size() != own)
          throw Error(ErrorCode::InconsistentSheets, "sheet map " + show(vertex_list(x, cell)) + " -> " +
                                                         show(vertex_list(x, face)) + " needs " + std::to_string(own) + " entries");
        for (std::size_t k = 0; k < own; ++k) {
          if (map[k] >= target)
            throw Error(ErrorCode::InconsistentSheets, "sheet " + std::to_string(k) + " of " + show(vertex_list(x, cell)) +
                                                           " maps to missing sheet " + std::to_string(map[k]) + " of " +
                                                           show(vertex_list(x, face)));
          table[c][k * static_cast<std::size_t>(d + 1) + static_cast<std::size_t>(i)] = map[k];
        }
      }
    }
  }

  // faces of faces must not depend on the route taken
  for (int d = 2; d <= dim; ++d)
    for (std::size_t c = 0; c < x.count(d); ++c) {
      const SimplexId cell{d, c};
      for (std::size_t k = 0; k < e.sheets(cell); ++k)
        for (int j = 1; j <= d; ++j)
          for (int i = 0; i < j; ++i) {
            const std::size_t via_j = e.face_sheet({d - 1, x.face(cell, j)}, i, e.face_sheet(cell, j, k));
            const std::size_t via_i = e.face_sheet({d - 1, x.face(cell, i)}, j - 1, e.face_sheet(cell, i, k));
            if (via_j != via_i)
              throw Error(ErrorCode::InconsistentSheets, "sheet maps of " + show(vertex_list(x, cell)) + " do not commute");
          }
    }
  return e;
}

std::size_t EmbeddedComplex::sheets(SimplexId cell) const {
  return sheets_.at(static_cast<std::size_t>(cell.dim)).at(cell.index);
}

std::size_t EmbeddedComplex::face_sheet(SimplexId cell, int slot, std::size_t sheet) const {
  return face_sheets_.at(static_cast<std::size_t>(cell.dim))
      .at(cell.index)
      .at(sheet * static_cast<std::size_t>(cell.dim + 1) + static_cast<std::size_t>(slot));
}

std::size_t Duplication::simplex_of(int dim, CellSheet cs) const {
  const auto& row = projection.at(static_cast<std::size_t>(dim));
  auto it = std::lower_bound(row.begin(), row.end(), cs);
  if (it == row.end() || *it != cs) return DeltaComplex::npos;
  return static_cast<std::size_t>(it - row.begin());
}

Duplication duplicate_sheets(const EmbeddedComplex& embedded) {
  const DeltaComplex& x = embedded.bounded();
  const int n = x.n();
  std::vector<std::vector<CellSheet>> projection(static_cast<std::size_t>(n) + 1);
  std::vector<std::vector<std::size_t>> offset(static_cast<std::size_t>(n) + 1);
  for (int d = 0; d <= n; ++d) {
    auto& row = projection[static_cast<std::size_t>(d)];
    for (std::size_t c = 0; c < x.count(d); ++c) {
      offset[static_cast<std::size_t>(d)].push_back(row.size());
      for (std::size_t k = 0; k < embedded.sheets({d, c}); ++k) row.push_back({c, k});
    }
  }
  RawComplex raw;
  raw.n = n;
  for (const auto& row : projection) raw.counts.push_back(row.size());
  for (int d = 1; d <= n; ++d) {
    const auto& row = projection[static_cast<std::size_t>(d)];
    for (std::size_t s = 0; s < row.size(); ++s) {
      const SimplexId cell{d, row[s].cell};
      for (int i = 0; i <= d; ++i) {
        const std::size_t face = x.face(cell, i);
        const std::size_t target = offset[static_cast<std::size_t>(d - 1)][face] + embedded.face_sheet(cell, i, row[s].sheet);
        raw.faces.push_back({d, s, i, target});
      }
    }
  }
  return {DeltaComplex::build(raw), std::move(projection)};
}

BalancingSolution alpha_from_balancing(const EmbeddedComplex& embedded, std::size_t ridge, std::size_t sheet) {
  const DeltaComplex& x = embedded.bounded();
  const int n = embedded.dim();
  if (n < 1 || ridge >= x.count(n - 1))
    throw Error(ErrorCode::WrongDimension, "no bounded cell " + std::to_string(ridge) + " of dimension n - 1");
  const SimplexId rid{n - 1, ridge};
  if (sheet >= embedded.sheets(rid)) throw Error(ErrorCode::IndexMismatch, "ridge has no sheet " + std::to_string(sheet));

  const auto& verts = x.vertices(rid);
  std::vector<IntVector> base;
  for (auto v : verts) base.push_back(embedded.lifted(v));
  if (!unimodular(base)) throw Error(ErrorCode::NonUnimodular, "cone over ridge " + show(verts));

  IntVector lhs(static_cast<std::size_t>(embedded.ambient_dim()) + 1);
  std::size_t adjacent = 0;
  for (const auto& t : x.link(rid).vertices()) {
    const int slot = DeltaComplex::opposite(t).slot;
    const IntVector& w = embedded.lifted(x.vertex({t.coface, slot}));
    auto cone = base;
    cone.push_back(w);
    if (!unimodular(cone)) throw Error(ErrorCode::NonUnimodular, "cone over facet " + show(x.vertices(t.coface)));
    for (std::size_t k = 0; k < embedded.sheets(t.coface); ++k) {
      if (embedded.face_sheet(t.coface, slot, k) != sheet) continue;
      for (std::size_t i = 0; i < lhs.size(); ++i) lhs[i] += w[i];
      ++adjacent;
    }
  }
  for (const auto& cell : embedded.unbounded()) {
    if (cell.vertices != verts || cell.rays.size() != 1) continue;
    IntVector u = cell.rays.front();
    u.push_back(0);
    auto cone = base;
    cone.push_back(u);
    if (!unimodular(cone)) throw Error(ErrorCode::NonUnimodular, "cone over unbounded cell at " + show(verts));
    for (std::size_t i = 0; i < lhs.size(); ++i) lhs[i] += u[i];
  }

  IntMatrix m(lhs.size(), base.size());
  for (std::size_t j = 0; j < base.size(); ++j)
    for (std::size_t i = 0; i < lhs.size(); ++i) m(i, j) = base[j][i];
  auto c = solve_integral(m, lhs);
  if (!c) throw Error(ErrorCode::NoSolution, "balancing fails at ridge " + show(verts));
  return {ridge, sheet, std::move(*c), adjacent};
}

EmbeddedStructure structure_from_embedding(const EmbeddedComplex& embedded) {
  Duplication dup = duplicate_sheets(embedded);
  const int n = dup.complex.n();
  std::vector<AlphaEntry> alpha;
  if (n >= 1)
    for (std::size_t r = 0; r < dup.complex.count(n - 1); ++r) {
      const CellSheet cs = dup.projection[static_cast<std::size_t>(n - 1)][r];
      const BalancingSolution sol = alpha_from_balancing(embedded, cs.cell, cs.sheet);
      for (std::size_t i = 0; i < sol.coefficients.size(); ++i) alpha.push_back({r, static_cast<int>(i), sol.coefficients[i]});
    }
  TropicalStructure structure = TropicalStructure::build(dup.complex, alpha);
  return {std::move(dup), std::move(structure)};
}

Robustness robustness_check(const EmbeddedComplex& embedded, SimplexId cell) {
  const DeltaComplex& x = embedded.bounded();
  if (cell.dim < 0 || cell.dim > x.n() || cell.index >= x.count(cell.dim))
    throw Error(ErrorCode::IndexMismatch, "no bounded cell " + std::to_string(cell.index) + " of dimension " + std::to_string(cell.dim));
  const auto& verts = x.vertices(cell);
  const auto big_n = static_cast<std::size_t>(embedded.ambient_dim());

  Robustness out;
  for (const auto& u : embedded.unbounded())
    if (u.vertices == verts && u.rays.size() == 1) out.rays.push_back(u.rays.front());

  RatMatrix directions(verts.size() - 1, big_n);
  for (std::size_t i = 1; i < verts.size(); ++i)
    for (std::size_t j = 0; j < big_n; ++j) directions(i - 1, j) = embedded.lifted(verts[i])[j] - embedded.lifted(verts[0])[j];
  const std::vector<RatVector> normals = kernel_basis(directions);

  if (!normals.empty()) {
    std::vector<Inequality> system;
    for (const auto& u : out.rays) {
      Inequality ineq{RatVector(normals.size()), 1};
      for (std::size_t k = 0; k < normals.size(); ++k)
        for (std::size_t j = 0; j < big_n; ++j) ineq.coefficients[k] += normals[k][j] * u[j];
      system.push_back(std::move(ineq));
    }
    if (auto y = feasible_point(system, normals.size())) {
      RatVector ell(big_n);
      for (std::size_t k = 0; k < normals.size(); ++k)
        for (std::size_t j = 0; j < big_n; ++j) ell[j] += (*y)[k] * normals[k][j];
      if (out.rays.empty()) ell = normals.front();
      out.robust = true;
      out.certificate = std::move(ell);
    }
  }

  if (!out.rays.empty()) {
    for (std::size_t i = 0; i < embedded.unbounded().size(); ++i) {
      const auto& c = embedded.unbounded()[i];
      if (!std::includes(c.vertices.begin(), c.vertices.end(), verts.begin(), verts.end())) continue;
      const bool all = std::all_of(out.rays.begin(), out.rays.end(), [&](const IntVector& r) {
        return std::find(c.rays.begin(), c.rays.end(), r) != c.rays.end();
      });
      if (!all) continue;
      if (!out.maximal_unbounded_cell || c.dimension() < embedded.unbounded()[*out.maximal_unbounded_cell].dimension())
        out.maximal_unbounded_cell = i;
    }
  }
  return out;
}

std::map<std::size_t, Integer> push_forward(const Duplication& duplication, const Divisor& d) {
  if (!d.ridge_supported()) throw Error(ErrorCode::NotRidgeSupported, "divisor has facet-interior pieces");
  const int n = duplication.complex.n();
  std::map<std::size_t, Integer> out;
  if (n < 1) return out;
  const auto& row = duplication.projection[static_cast<std::size_t>(n - 1)];
  for (const auto& [r, c] : d.ridge_part) {
    if (r >= row.size()) throw Error(ErrorCode::IndexMismatch, "divisor names ridge " + std::to_string(r));
    out[row[r].cell] += c;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

namespace {

void require_constant_on_unbounded(const EmbeddedComplex& embedded, const IntVector& values) {
  if (values.size() != embedded.vertex_count())
    throw Error(ErrorCode::IndexMismatch, "function needs one value per embedded vertex");
  for (const auto& cell : embedded.unbounded())
    for (auto v : cell.vertices)
      if (values[v] != values[cell.vertices.front()])
        throw Error(ErrorCode::NotConstantOnUnbounded, "function varies on unbounded cell at " + show(cell.vertices));
}

}  // namespace

std::map<std::size_t, Integer> embedded_weights(const EmbeddedComplex& embedded, const IntVector& values) {
  require_constant_on_unbounded(embedded, values);
  const DeltaComplex& x = embedded.bounded();
  const int n = embedded.dim();
  const std::size_t width = static_cast<std::size_t>(embedded.ambient_dim()) + 1;
  std::map<std::size_t, Integer> out;
  if (n < 1) return out;
  for (std::size_t r = 0; r < x.count(n - 1); ++r) {
    const SimplexId rid{n - 1, r};
    const auto& verts = x.vertices(rid);
    // homogeneous linear functional agreeing with f on the ridge
    RatMatrix m(verts.size(), width);
    RatVector rhs(verts.size());
    for (std::size_t i = 0; i < verts.size(); ++i) {
      for (std::size_t j = 0; j < width; ++j) m(i, j) = embedded.lifted(verts[i])[j];
      rhs[i] = values[verts[i]];
    }
    const auto functional = solve_rational(m, rhs);
    if (!functional) throw Error(ErrorCode::NonUnimodular, "ridge " + show(verts) + " is affinely dependent");

    const std::size_t ridge_sheets = embedded.sheets(rid);
    Rational weight = 0;
    IntVector normal_sum(width);
    for (const auto& t : x.link(rid).vertices()) {
      const int slot = DeltaComplex::opposite(t).slot;
      const std::size_t w = x.vertex({t.coface, slot});
      const Integer mult(static_cast<unsigned long>(embedded.sheets(t.coface)));
      weight += Rational(mult * values[w]);
      for (std::size_t j = 0; j < width; ++j) normal_sum[j] += mult * embedded.lifted(w)[j];
    }
    for (const auto& cell : embedded.unbounded()) {
      if (cell.vertices != verts || cell.rays.size() != 1) continue;
      // f is constant along the ray, so it contributes only through the functional
      for (std::size_t j = 0; j + 1 < width; ++j) normal_sum[j] += Integer(static_cast<unsigned long>(ridge_sheets)) * cell.rays.front()[j];
    }
    for (std::size_t j = 0; j < width; ++j) weight -= (*functional)[j] * normal_sum[j];
    if (!is_integral(weight)) throw Error(ErrorCode::NonUnimodular, "non-integral weight at ridge " + show(verts));
    if (weight != 0) out[r] = weight.get_num();
  }
  return out;
}

PushForwardReport push_forward_and_compare(const EmbeddedComplex& embedded, const Divisor& d,
                                           const std::optional<IntVector>& values) {
  const EmbeddedStructure es = structure_from_embedding(embedded);
  PushForwardReport report;
  report.pushed = push_forward(es.duplication, d);
  if (!values) return report;
  require_constant_on_unbounded(embedded, *values);
  VertexFunction pulled;
  for (const auto& cs : es.duplication.projection[0]) pulled.values.push_back((*values)[cs.cell]);
  report.pushed_div = push_forward(es.duplication, div_vertex_function(es.structure, pulled));
  report.weights = embedded_weights(embedded, *values);
  report.agree = *report.pushed_div == *report.weights;
  return report;
}

}  // namespace tcx
