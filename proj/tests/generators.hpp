#pragma once

// Random inputs for property tests. Every generator takes an explicit engine
// so runs are reproducible.

#include <functional>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "tcx/degeneration.hpp"
#include "tcx/embedded.hpp"
#include "tcx/tropical_structure.hpp"

namespace gen {

using tcx::Integer;

// Constants satisfying the weak constraint.
inline tcx::TropicalStructure random_weak(const tcx::DeltaComplex& x, std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-3, 3);
  std::vector<tcx::AlphaEntry> entries;
  const int n = x.n();
  for (std::size_t r = 0; r < x.count(n - 1); ++r) {
    Integer rest = Integer(static_cast<unsigned long>(x.degree({n - 1, r})));
    for (int i = 0; i + 1 < n; ++i) {
      const Integer v = d(rng);
      entries.push_back({r, i, v});
      rest -= v;
    }
    entries.push_back({r, n - 1, rest});
  }
  return tcx::TropicalStructure::build(x, entries);
}

// Non-strict data whose self-intersections encode the given constants.
inline tcx::DegenerationData non_strict_for(const tcx::TropicalStructure& t) {
  const tcx::DeltaComplex& x = t.complex();
  tcx::DegenerationData data{x, tcx::DegenerationMode::NonStrict, {}, {}, {}, {}, {}};
  const int n = x.n();
  for (std::size_t q = 0; q < x.count(n - 2); ++q) {
    const auto& link = x.link({n - 2, q});
    for (std::size_t i = 0; i < link.size(0); ++i) {
      const auto opp = tcx::DeltaComplex::opposite(link.vertices()[i]);
      const Integer loops(static_cast<unsigned long>(tcx::loops_at(x, {n - 2, q}, i)));
      data.self_intersections[{q, i}] = -t.alpha(opp) + 2 * loops;
    }
  }
  return data;
}

// Strict data for a regular complex with the given constants.
inline tcx::DegenerationData strict_for(const tcx::TropicalStructure& t) {
  const tcx::DeltaComplex& x = t.complex();
  tcx::DegenerationData data{x, tcx::DegenerationMode::Strict, {}, {}, {}, {}, {}};
  const int n = x.n();
  for (std::size_t r = 0; r < x.count(n - 1); ++r)
    for (int i = 0; i < n; ++i)
      data.vertex_ridge_degrees[{x.vertices({n - 1, r})[static_cast<std::size_t>(i)], r}] = -t.alpha(r, i);
  return data;
}

// Vertex values constant on the vertex set of every unbounded cell.
inline tcx::IntVector random_admissible(const tcx::EmbeddedComplex& e, std::mt19937& rng) {
  const std::size_t n = e.vertex_count();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (const auto& c : e.unbounded())
    for (auto v : c.vertices) parent[find(v)] = find(c.vertices.front());
  const tcx::IntVector per_class = oracle::random_vector(n, rng, -9, 9);
  tcx::IntVector out(n);
  for (std::size_t v = 0; v < n; ++v) out[v] = per_class[find(v)];
  return out;
}

}  // namespace gen
