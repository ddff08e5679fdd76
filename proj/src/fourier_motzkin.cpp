#include "tcx/fourier_motzkin.hpp"

#include <algorithm>
#include <cassert>

namespace tcx {

namespace {

// Scale so the first nonzero coefficient has absolute value 1; keeps duplicate
// detection meaningful.
Inequality normalised(Inequality ineq) {
  auto lead = std::find_if(ineq.coefficients.begin(), ineq.coefficients.end(), [](const Rational& c) { return c != 0; });
  if (lead == ineq.coefficients.end()) return ineq;
  const Rational scale = abs(*lead);
  for (auto& c : ineq.coefficients) c /= scale;
  ineq.bound /= scale;
  return ineq;
}

void push_unique(std::vector<Inequality>& system, Inequality ineq) {
  ineq = normalised(std::move(ineq));
  for (auto& existing : system)
    if (existing.coefficients == ineq.coefficients) {
      existing.bound = std::max(existing.bound, ineq.bound);
      return;
    }
  system.push_back(std::move(ineq));
}

}  // namespace

std::optional<RatVector> feasible_point(const std::vector<Inequality>& system, std::size_t variables) {
  // stages[k] involves only variables 0..k-1
  std::vector<std::vector<Inequality>> stages(variables + 1);
  for (const auto& ineq : system) {
    assert(ineq.coefficients.size() == variables);
    push_unique(stages[variables], ineq);
  }

  for (std::size_t k = variables; k > 0; --k) {
    const std::size_t var = k - 1;
    std::vector<Inequality> lower, upper;
    for (const auto& ineq : stages[k]) {
      if (ineq.coefficients[var] > 0) {
        lower.push_back(ineq);
      } else if (ineq.coefficients[var] < 0) {
        upper.push_back(ineq);
      } else {
        push_unique(stages[k - 1], ineq);
      }
    }
    for (const auto& lo : lower)
      for (const auto& up : upper) {
        // combine with positive weights so `var` cancels
        const Rational wl = -up.coefficients[var];
        const Rational wu = lo.coefficients[var];
        Inequality sum{RatVector(variables), wl * lo.bound + wu * up.bound};
        for (std::size_t j = 0; j < variables; ++j) sum.coefficients[j] = wl * lo.coefficients[j] + wu * up.coefficients[j];
        sum.coefficients[var] = 0;
        push_unique(stages[k - 1], std::move(sum));
      }
  }
  for (const auto& ineq : stages[0])
    if (ineq.bound > 0) return std::nullopt;

  RatVector point(variables);
  for (std::size_t var = 0; var < variables; ++var) {
    std::optional<Rational> low, high;
    for (const auto& ineq : stages[var + 1]) {
      const Rational& a = ineq.coefficients[var];
      if (a == 0) continue;
      Rational rest = ineq.bound;
      for (std::size_t j = 0; j < var; ++j) rest -= ineq.coefficients[j] * point[j];
      const Rational limit = rest / a;
      if (a > 0) {
        if (!low || limit > *low) low = limit;
      } else {
        if (!high || limit < *high) high = limit;
      }
    }
    if (low) {
      point[var] = *low;
    } else if (high) {
      point[var] = *high;
    }
  }
  return point;
}

}  // namespace tcx
