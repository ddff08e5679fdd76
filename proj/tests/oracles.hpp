#pragma once

// Independent reference computations used only by the tests. None of these
// call into the library routines they are compared against.

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "tcx/delta_complex.hpp"
#include "tcx/exact.hpp"

namespace oracle {

using tcx::Integer;
using tcx::IntMatrix;
using tcx::IntVector;
using tcx::RatMatrix;
using tcx::Rational;
using tcx::RatVector;

// Characteristic polynomial det(xI - A), coefficients from x^0 upwards
// (Faddeev-LeVerrier).
inline std::vector<Rational> char_poly(const IntMatrix& a) {
  const std::size_t n = a.rows();
  const RatMatrix ar = tcx::to_rational(a);
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  RatMatrix m(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    RatMatrix next = ar * m;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    m = next;
    RatMatrix am = ar * m;
    Rational trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += am(i, i);
    c[n - k] = -trace / Rational(static_cast<long>(k));
  }
  return c;
}

inline std::size_t sign_changes(const std::vector<Rational>& coeffs) {
  std::size_t changes = 0;
  int last = 0;
  for (const auto& x : coeffs) {
    const int s = sgn(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

struct Signs {
  std::size_t positive = 0, negative = 0, zero = 0;
};

// Descartes' rule is exact for a polynomial with only real roots, which holds
// for characteristic polynomials of symmetric matrices.
inline Signs eigen_signs(const IntMatrix& a) {
  std::vector<Rational> c = char_poly(a);
  Signs s;
  while (s.zero < c.size() && c[s.zero] == 0) ++s.zero;
  std::vector<Rational> rest(c.begin() + static_cast<long>(s.zero), c.end());
  s.positive = sign_changes(rest);
  for (std::size_t i = 1; i < rest.size(); i += 2) rest[i] = -rest[i];
  s.negative = sign_changes(rest);
  return s;
}

inline Rational determinant(RatMatrix m) {
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      m.swap_rows(p, c);
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      const Rational f = m(r, c) / m(c, c);
      if (f == 0) continue;
      for (std::size_t k = c; k < n; ++k) m(r, k) -= f * m(c, k);
    }
  }
  return det;
}

inline void combinations(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                         std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    combinations(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

inline std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  combinations(n, k, 0, cur, out);
  return out;
}

// Invariant factors from determinantal divisors: d_k = gcd of all k x k minors.
inline IntVector invariant_factors(const IntMatrix& a) {
  const RatMatrix ar = tcx::to_rational(a);
  IntVector out;
  Integer previous = 1;
  for (std::size_t k = 1; k <= std::min(a.rows(), a.cols()); ++k) {
    Integer g = 0;
    for (const auto& rows : subsets(a.rows(), k))
      for (const auto& cols : subsets(a.cols(), k)) {
        RatMatrix m(k, k);
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) m(i, j) = ar(rows[i], cols[j]);
        const Rational d = determinant(m);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), Integer(d.get_num()).get_mpz_t());
      }
    if (g == 0) break;
    out.push_back(g / previous);
    previous = g;
  }
  return out;
}

// Vertex sets of every simplex recomputed from the raw face tables: the
// vertices of s are those of its last face followed by the last vertex of its
// first face.
inline std::vector<std::vector<std::vector<std::size_t>>> vertex_sets(const tcx::RawComplex& raw) {
  std::map<std::tuple<int, std::size_t, int>, std::size_t> face;
  for (const auto& f : raw.faces) face[{f.dim, f.index, f.slot}] = f.target;
  std::vector<std::vector<std::vector<std::size_t>>> out(raw.counts.size());
  for (std::size_t v = 0; v < raw.counts[0]; ++v) out[0].push_back({v});
  for (std::size_t d = 1; d < raw.counts.size(); ++d)
    for (std::size_t i = 0; i < raw.counts[d]; ++i) {
      const int dim = static_cast<int>(d);
      std::vector<std::size_t> vs = out[d - 1][face.at({dim, i, dim})];
      vs.push_back(out[d - 1][face.at({dim, i, 0})].back());
      out[d].push_back(vs);
    }
  return out;
}

inline bool contains(const std::vector<std::size_t>& big, const std::vector<std::size_t>& small) {
  std::set<std::size_t> b(big.begin(), big.end());
  return std::all_of(small.begin(), small.end(), [&](std::size_t x) { return b.count(x) > 0; });
}

// alpha keyed by (ridge, vertex) for regular complexes.
using VertexAlpha = std::map<std::pair<std::size_t, std::size_t>, Integer>;

// Local matrix at an (n-2)-simplex q of a regular complex, indexed by the
// ridges through q in ascending order.
inline IntMatrix local_matrix(const tcx::RawComplex& raw, const VertexAlpha& alpha, std::size_t q,
                              std::vector<std::size_t>* ridges_out = nullptr) {
  const auto sets = vertex_sets(raw);
  const std::size_t n = static_cast<std::size_t>(raw.n);
  const auto& base = sets[n - 2][q];
  std::vector<std::size_t> ridges;
  for (std::size_t r = 0; r < sets[n - 1].size(); ++r)
    if (contains(sets[n - 1][r], base)) ridges.push_back(r);
  IntMatrix m(ridges.size(), ridges.size());
  for (std::size_t a = 0; a < ridges.size(); ++a) {
    const auto& ra = sets[n - 1][ridges[a]];
    std::size_t far = 0;
    for (auto v : ra)
      if (!contains(base, {v})) far = v;
    m(a, a) = -alpha.at({ridges[a], far});
    for (std::size_t b = 0; b < ridges.size(); ++b) {
      if (a == b) continue;
      for (const auto& f : sets[n])
        if (contains(f, ra) && contains(f, sets[n - 1][ridges[b]])) m(a, b) += 1;
    }
  }
  if (ridges_out) *ridges_out = ridges;
  return m;
}

// Coefficients of div(phi) on a regular complex straight from its definition.
inline IntVector divisor(const tcx::RawComplex& raw, const VertexAlpha& alpha, const IntVector& phi) {
  const auto sets = vertex_sets(raw);
  const std::size_t n = static_cast<std::size_t>(raw.n);
  IntVector out(sets[n - 1].size());
  for (std::size_t r = 0; r < sets[n - 1].size(); ++r) {
    const auto& ridge = sets[n - 1][r];
    for (const auto& f : sets[n])
      if (contains(f, ridge))
        for (auto v : f)
          if (!contains(ridge, {v})) out[r] += phi[v];
    for (auto v : ridge) out[r] -= alpha.at({r, v}) * phi[v];
  }
  return out;
}

// Solves a square nonsingular system by Cramer's rule.
inline RatVector cramer(const IntMatrix& a, const IntVector& b) {
  const RatMatrix ar = tcx::to_rational(a);
  const Rational det = determinant(ar);
  RatVector x(a.rows());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    RatMatrix m = ar;
    for (std::size_t i = 0; i < a.rows(); ++i) m(i, j) = Rational(b[i]);
    x[j] = determinant(m) / det;
  }
  return x;
}

// Random unimodular matrix as a product of elementary operations.
inline IntMatrix random_unimodular(std::size_t n, std::mt19937& rng, int steps = 12) {
  IntMatrix u = IntMatrix::identity(n);
  if (n < 2) {
    if (n == 1 && rng() % 2) u(0, 0) = -1;
    return u;
  }
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::uniform_int_distribution<int> coef(-2, 2);
  for (int s = 0; s < steps; ++s) {
    const std::size_t i = pick(rng), j = pick(rng);
    if (i == j) {
      for (std::size_t c = 0; c < n; ++c) u(i, c) = -u(i, c);
      continue;
    }
    const int k = coef(rng);
    for (std::size_t c = 0; c < n; ++c) u(i, c) += k * u(j, c);
  }
  return u;
}

inline IntVector random_vector(std::size_t n, std::mt19937& rng, int lo = -5, int hi = 5) {
  std::uniform_int_distribution<int> d(lo, hi);
  IntVector v(n);
  for (auto& x : v) x = d(rng);
  return v;
}

}  // namespace oracle
