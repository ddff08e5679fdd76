#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "tcx/curves.hpp"
#include "tcx/delta_complex.hpp"
#include "tcx/exact.hpp"
#include "tcx/pl_divisors.hpp"
#include "tcx/tropical_structure.hpp"

namespace tcx {

enum class DegenerationMode { Strict, NonStrict };

/// Integer intersection data of a degeneration, keyed by simplices of its dual
/// complex.
struct DegenerationData {
  DeltaComplex complex;
  DegenerationMode mode = DegenerationMode::Strict;
  /// (vertex, ridge) -> deg(C_v . C_r)
  std::map<std::pair<std::size_t, std::size_t>, Integer> vertex_ridge_degrees;
  /// ((n-2)-simplex q, index of t in link(q)_0) -> self-intersection of C_{q,t}
  std::map<std::pair<std::size_t, std::size_t>, Integer> self_intersections;
  /// name -> (ridge -> deg(D . C_r))
  std::map<std::string, std::map<std::size_t, Integer>> divisors;
  /// name -> (edge -> deg(C_e . C))
  std::map<std::string, std::map<std::size_t, Integer>> curves;
  std::map<std::pair<std::string, std::string>, Rational> claimed;
};

/// One identity verified while deriving structure constants.
struct ConsistencyCheck {
  std::string name;
  std::size_t ridge = 0;
  bool pass = true;
};

struct DegenerationStructure {
  TropicalStructure structure;
  std::vector<ConsistencyCheck> checks;
  /// deg(C_v . C_r) as used or derived, keyed (vertex, ridge).
  std::map<std::pair<std::size_t, std::size_t>, Integer> vertex_ridge_degrees;
};

/// Throws InconsistentData naming the violated identity and ridge.
DegenerationStructure build_structure_from_degeneration(const DegenerationData& data);

/// #{t in link(r)_0 : opp(t) maps to v}
std::size_t opposite_count(const DeltaComplex& complex, std::size_t ridge, std::size_t vertex);
/// Loops at link vertex t of link(q).
std::size_t loops_at(const DeltaComplex& complex, SimplexId q, std::size_t t);

struct DivisorSpecialization {
  Divisor divisor;
  WeilReport weil;
};

struct CurveSpecialization {
  Curve curve;
  BalanceResult balance;
};

using Specialization = std::variant<DivisorSpecialization, CurveSpecialization>;

DivisorSpecialization specialize_divisor(const DegenerationData& data, const TropicalStructure& structure,
                                         const std::string& name, unsigned jobs = 1);
CurveSpecialization specialize_curve(const DegenerationData& data, const TropicalStructure& structure,
                                     const std::string& name);
/// Looks the name up among divisors first, then curves. Throws UnknownName.
Specialization specialize(const DegenerationData& data, const std::string& name, unsigned jobs = 1);

struct TheoremReport {
  Rational computed;
  Rational claimed;
  bool match = false;
  Intersection intersection;
};

/// Throws UnknownName or PreconditionFailed.
TheoremReport verify_theorem(const DegenerationData& data, const std::string& divisor, const std::string& curve,
                             unsigned jobs = 1);

}  // namespace tcx
