#include "tcx/tropical_structure.hpp"

#include <optional>
#include <string>

#include "tcx/error.hpp"
#include "tcx/parallel.hpp"

namespace tcx {

TropicalStructure TropicalStructure::build(DeltaComplex complex, const std::vector<AlphaEntry>& entries) {
  TropicalStructure t;
  const int n = complex.n();
  t.complex_ = std::make_shared<const DeltaComplex>(std::move(complex));
  if (n == 0) {
    if (!entries.empty()) throw Error(ErrorCode::MalformedInput, "a 0-dimensional complex has no ridges");
    return t;
  }
  const std::size_t ridges = t.complex_->count(n - 1);
  std::vector<std::vector<std::optional<Integer>>> given(ridges, std::vector<std::optional<Integer>>(static_cast<std::size_t>(n)));
  for (const auto& e : entries) {
    if (e.ridge >= ridges || e.slot < 0 || e.slot >= n)
      throw Error(ErrorCode::MalformedInput,
                  "alpha entry (" + std::to_string(e.ridge) + ", " + std::to_string(e.slot) + ") out of range");
    auto& cell = given[e.ridge][static_cast<std::size_t>(e.slot)];
    if (cell) throw Error(ErrorCode::MalformedInput, "duplicate alpha entry for ridge " + std::to_string(e.ridge));
    cell = e.value;
  }
  t.alpha_.resize(ridges);
  for (std::size_t r = 0; r < ridges; ++r)
    for (int i = 0; i < n; ++i) {
      auto& cell = given[r][static_cast<std::size_t>(i)];
      if (!cell) {
        if (n == 1) {
          cell = Integer(static_cast<unsigned long>(t.complex_->degree({0, r})));
        } else {
          throw Error(ErrorCode::MissingAlpha,
                      "no alpha for ridge " + std::to_string(r) + ", slot " + std::to_string(i));
        }
      }
      t.alpha_[r].push_back(*cell);
    }
  return t;
}

const Integer& TropicalStructure::alpha(std::size_t ridge, int slot) const {
  return alpha_.at(ridge).at(static_cast<std::size_t>(slot));
}

std::vector<AlphaEntry> TropicalStructure::entries() const {
  std::vector<AlphaEntry> out;
  for (std::size_t r = 0; r < alpha_.size(); ++r)
    for (std::size_t i = 0; i < alpha_[r].size(); ++i) out.push_back({r, static_cast<int>(i), alpha_[r][i]});
  return out;
}

WeakReport check_weak(const TropicalStructure& structure) {
  WeakReport report;
  const int n = structure.n();
  if (n == 0) return report;
  for (std::size_t r = 0; r < structure.ridge_count(); ++r) {
    Integer sum = 0;
    for (int i = 0; i < n; ++i) sum += structure.alpha(r, i);
    const std::size_t deg = structure.complex().degree({n - 1, r});
    if (deg == 0) report.zero_degree_ridges.push_back(r);
    if (sum != Integer(static_cast<unsigned long>(deg))) report.violations.push_back({r, sum, deg});
  }
  return report;
}

LocalMatrix local_matrix(const TropicalStructure& structure, SimplexId q) {
  const int n = structure.n();
  if (n < 2 || q.dim != n - 2)
    throw Error(ErrorCode::WrongDimension, "local matrices live on simplices of dimension n - 2");
  if (q.index >= structure.complex().count(q.dim))
    throw Error(ErrorCode::MalformedInput, "no simplex " + std::to_string(q.index) + " of dimension " + std::to_string(q.dim));
  const Link& link = structure.complex().link(q);
  LocalMatrix m{q, link.vertices(), IntMatrix(link.size(0), link.size(0))};
  for (std::size_t t = 0; t < m.index.size(); ++t) m.entries(t, t) = -structure.alpha(DeltaComplex::opposite(m.index[t]));
  if (link.size(1) > 0)
    for (const auto& edge : link.faces[1]) {
      const std::size_t a = edge[0], b = edge[1];
      if (a == b) {
        m.entries(a, a) += 2;
      } else {
        m.entries(a, b) += 1;
        m.entries(b, a) += 1;
      }
    }
  return m;
}

Classification classify(const TropicalStructure& structure, unsigned jobs) {
  const WeakReport weak = check_weak(structure);
  if (!weak.pass())
    throw Error(ErrorCode::WeakConstraintViolated,
                "ridge " + std::to_string(weak.violations.front().ridge) + ": alpha sum " +
                    weak.violations.front().alpha_sum.get_str() + " != degree " +
                    std::to_string(weak.violations.front().degree));
  Classification c;
  const int n = structure.n();
  if (n < 2) return c;
  const std::size_t count = structure.complex().count(n - 2);
  c.per_base.resize(count);
  parallel_for(count, jobs, [&](std::size_t q) {
    c.per_base[q] = {q, inertia(local_matrix(structure, {n - 2, q}).entries)};
  });
  for (const auto& li : c.per_base)
    if (li.inertia.positive != 1) c.verdict = Verdict::WeakOnly;
  return c;
}

}  // namespace tcx
