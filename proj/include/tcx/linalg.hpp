#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tcx/exact.hpp"

namespace tcx {

/// Reduced row echelon form over Q. `pivots[i]` is the pivot column of row i.
struct RowEchelon {
  RatMatrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank() const noexcept { return pivots.size(); }
};

RowEchelon row_echelon(const RatMatrix& a);

std::size_t rank(const RatMatrix& a);

/// Basis of the right kernel {x : A x = 0}; one vector per free column, with a
/// 1 in that column.
std::vector<RatVector> kernel_basis(const RatMatrix& a);

/// A particular solution of A x = b with all free variables set to zero, or
/// nullopt when the system is inconsistent.
std::optional<RatVector> solve_rational(const RatMatrix& a, const RatVector& b);

/// Smith normal form U * A * V = D with U, V unimodular and D diagonal with
/// d_1 | d_2 | ... | d_rank, all positive.
struct SmithForm {
  IntMatrix u;
  IntMatrix v;
  IntVector diagonal;  // length rank
  std::size_t rows = 0;
  std::size_t cols = 0;

  std::size_t rank() const noexcept { return diagonal.size(); }
};

SmithForm smith_normal_form(const IntMatrix& a);

/// Integral solution of A x = b decided through the Smith form of A, or
/// nullopt if none exists.
std::optional<IntVector> solve_integral(const SmithForm& snf, const IntVector& b);
std::optional<IntVector> solve_integral(const IntMatrix& a, const IntVector& b);

/// Sylvester inertia of a symmetric matrix.
struct Inertia {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;

  friend bool operator==(const Inertia&, const Inertia&) = default;
};

/// Exact inertia by symmetric congruence elimination (LDL^T with symmetric
/// pivoting and 2x2 blocks when the remaining diagonal vanishes).
Inertia inertia(const RatMatrix& symmetric);
Inertia inertia(const IntMatrix& symmetric);

bool is_symmetric(const IntMatrix& m);

}  // namespace tcx
