#include "tcx/linalg.hpp"

#include <algorithm>
#include <cassert>

namespace tcx {

RowEchelon row_echelon(const RatMatrix& a) {
  RowEchelon e{a, {}};
  RatMatrix& m = e.reduced;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    m.swap_rows(row, pivot);
    const Rational inv = 1 / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      const Rational f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
    }
    e.pivots.push_back(col);
    ++row;
  }
  return e;
}

std::size_t rank(const RatMatrix& a) { return row_echelon(a).rank(); }

std::vector<RatVector> kernel_basis(const RatMatrix& a) {
  const RowEchelon e = row_echelon(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<RatVector> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    RatVector x(a.cols());
    x[free] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = -e.reduced(i, free);
    basis.push_back(std::move(x));
  }
  return basis;
}

std::optional<RatVector> solve_rational(const RatMatrix& a, const RatVector& b) {
  assert(b.size() == a.rows());
  RatMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[r];
  }
  const RowEchelon e = row_echelon(aug);
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) return std::nullopt;
  RatVector x(a.cols());
  for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = e.reduced(i, a.cols());
  return x;
}

namespace {

// Row and column operations on the working matrix, mirrored into U (rows) and V
// (columns) so that U * A * V stays equal to the working matrix.
struct SmithWork {
  IntMatrix a, u, v;

  void swap_rows(std::size_t i, std::size_t j) { a.swap_rows(i, j); u.swap_rows(i, j); }
  void swap_cols(std::size_t i, std::size_t j) { a.swap_cols(i, j); v.swap_cols(i, j); }

  // row_i -= q * row_j
  void sub_row(std::size_t i, std::size_t j, const Integer& q) {
    for (std::size_t c = 0; c < a.cols(); ++c) a(i, c) -= q * a(j, c);
    for (std::size_t c = 0; c < u.cols(); ++c) u(i, c) -= q * u(j, c);
  }
  // col_i -= q * col_j
  void sub_col(std::size_t i, std::size_t j, const Integer& q) {
    for (std::size_t r = 0; r < a.rows(); ++r) a(r, i) -= q * a(r, j);
    for (std::size_t r = 0; r < v.rows(); ++r) v(r, i) -= q * v(r, j);
  }
  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < a.cols(); ++c) a(i, c) = -a(i, c);
    for (std::size_t c = 0; c < u.cols(); ++c) u(i, c) = -u(i, c);
  }
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& input) {
  const std::size_t m = input.rows();
  const std::size_t n = input.cols();
  SmithWork w{input, IntMatrix::identity(m), IntMatrix::identity(n)};
  IntMatrix& a = w.a;

  std::size_t t = 0;
  for (; t < std::min(m, n); ++t) {
    // smallest nonzero entry of the trailing block becomes the pivot
    bool found = false;
    std::size_t pr = t, pc = t;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j) {
        if (a(i, j) == 0) continue;
        if (!found || abs(a(i, j)) < abs(a(pr, pc))) {
          pr = i;
          pc = j;
          found = true;
        }
      }
    if (!found) break;
    w.swap_rows(t, pr);
    w.swap_cols(t, pc);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (a(i, t) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
        w.sub_row(i, t, q);
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a(t, j) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
        w.sub_col(j, t, q);
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) {
        // a remainder smaller than the pivot survived; promote it
        std::size_t best_r = t, best_c = t;
        for (std::size_t i = t + 1; i < m; ++i)
          if (a(i, t) != 0 && abs(a(i, t)) < abs(a(best_r, best_c))) { best_r = i; best_c = t; }
        for (std::size_t j = t + 1; j < n; ++j)
          if (a(t, j) != 0 && abs(a(t, j)) < abs(a(best_r, best_c))) { best_r = t; best_c = j; }
        w.swap_rows(t, best_r);
        w.swap_cols(t, best_c);
        continue;
      }
      // divisibility d_t | every trailing entry
      bool divisible = true;
      for (std::size_t i = t + 1; i < m && divisible; ++i)
        for (std::size_t j = t + 1; j < n; ++j) {
          if (mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t()) == 0) {
            w.sub_row(t, i, Integer(-1));
            divisible = false;
            break;
          }
        }
      if (divisible) break;
    }
    if (a(t, t) < 0) w.negate_row(t);
  }

  SmithForm s;
  s.rows = m;
  s.cols = n;
  s.u = std::move(w.u);
  s.v = std::move(w.v);
  for (std::size_t i = 0; i < t; ++i) s.diagonal.push_back(a(i, i));
  return s;
}

std::optional<IntVector> solve_integral(const SmithForm& snf, const IntVector& b) {
  assert(b.size() == snf.rows);
  const IntVector ub = snf.u.apply(b);
  IntVector y(snf.cols);
  for (std::size_t i = 0; i < snf.rows; ++i) {
    if (i < snf.rank()) {
      if (mpz_divisible_p(ub[i].get_mpz_t(), snf.diagonal[i].get_mpz_t()) == 0) return std::nullopt;
      y[i] = ub[i] / snf.diagonal[i];
    } else if (ub[i] != 0) {
      return std::nullopt;
    }
  }
  return snf.v.apply(y);
}

std::optional<IntVector> solve_integral(const IntMatrix& a, const IntVector& b) {
  return solve_integral(smith_normal_form(a), b);
}

Inertia inertia(const RatMatrix& input) {
  assert(input.rows() == input.cols());
  RatMatrix a = input;
  std::vector<std::size_t> active(a.rows());
  for (std::size_t i = 0; i < active.size(); ++i) active[i] = i;

  Inertia result;
  auto drop = [&active](std::size_t idx) { active.erase(std::find(active.begin(), active.end(), idx)); };

  while (!active.empty()) {
    auto diag = std::find_if(active.begin(), active.end(), [&](std::size_t i) { return a(i, i) != 0; });
    if (diag != active.end()) {
      const std::size_t p = *diag;
      const Rational d = a(p, p);
      (d > 0 ? result.positive : result.negative)++;
      drop(p);
      for (auto i : active) {
        if (a(i, p) == 0) continue;
        const Rational f = a(i, p) / d;
        for (auto j : active) a(i, j) -= f * a(p, j);
      }
      continue;
    }
    // zero diagonal: use a 2x2 block [[0, x], [x, 0]], which has one eigenvalue of each sign
    std::optional<std::pair<std::size_t, std::size_t>> block;
    for (auto i : active) {
      for (auto j : active)
        if (i != j && a(i, j) != 0) { block = {i, j}; break; }
      if (block) break;
    }
    if (!block) {
      result.zero += active.size();
      break;
    }
    const auto [p, q] = *block;
    const Rational x = a(p, q);
    ++result.positive;
    ++result.negative;
    drop(p);
    drop(q);
    // Schur complement: A_rest - B E^{-1} B^T with E^{-1} = [[0, 1/x], [1/x, 0]]
    RatMatrix update(a.rows(), a.cols());
    for (auto i : active)
      for (auto j : active) update(i, j) = (a(i, p) * a(q, j) + a(i, q) * a(p, j)) / x;
    for (auto i : active)
      for (auto j : active) a(i, j) -= update(i, j);
  }
  return result;
}

Inertia inertia(const IntMatrix& symmetric) { return inertia(to_rational(symmetric)); }

bool is_symmetric(const IntMatrix& m) {
  if (m.rows() != m.cols()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (m(i, j) != m(j, i)) return false;
  return true;
}

}  // namespace tcx
