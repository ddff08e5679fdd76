#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tcx/exact.hpp"

namespace tcx {

/// coefficients . y >= bound
struct Inequality {
  RatVector coefficients;
  Rational bound;
};

/// A point satisfying every inequality, found by exact Fourier-Motzkin
/// elimination and back-substitution, or nullopt when the system is empty.
std::optional<RatVector> feasible_point(const std::vector<Inequality>& system, std::size_t variables);

}  // namespace tcx
