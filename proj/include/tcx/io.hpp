#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "tcx/curves.hpp"
#include "tcx/degeneration.hpp"
#include "tcx/delta_complex.hpp"
#include "tcx/embedded.hpp"
#include "tcx/exact.hpp"
#include "tcx/pl_divisors.hpp"
#include "tcx/tropical_structure.hpp"

namespace tcx::io {

using Json = nlohmann::json;

inline constexpr const char* kVersion = "tcx-1";

/// Reads and parses a JSON file; throws MalformedInput on I/O or syntax errors.
Json load_file(const std::string& path);

// Integers are numbers when they fit in 64 bits and decimal strings otherwise.
Json to_json(const Integer& z);
Integer integer_from(const Json& j, const std::string& field);
/// [numerator, denominator] in lowest terms.
Json to_json(const Rational& q);
/// Accepts an integer, [num, den] or "num/den".
Rational rational_from(const Json& j, const std::string& field);

RawComplex raw_complex_from(const Json& doc);
Json to_json(const RawComplex& raw);

std::vector<AlphaEntry> alpha_from(const Json& doc);
Json alpha_to_json(const TropicalStructure& structure);

/// A fixture with "n", "simplices", "faces" and optional "alpha".
TropicalStructure structure_from(const Json& doc);

/// Fixture for a complex and its structure constants.
Json fixture_json(const TropicalStructure& structure);

/// [[ridge, coefficient], ...] or {"ridge_part": ..., "facet_pieces": ...}.
Divisor divisor_from(const Json& j);
Json to_json(const Divisor& d);

/// [[edge, multiplicity], ...]
Curve curve_from(const Json& j);
Json to_json(const Curve& c);

Json to_json(const PointSum& p);

/// {"edges": [[edge, [[coordinate, value], ...]], ...]}
BreakpointFunction breakpoint_function_from(const Json& j);

EmbeddedInput embedded_from(const Json& doc);

DegenerationData degeneration_from(const Json& doc);

Json to_json(const IntMatrix& m);
Json to_json(const IntVector& v);
Json to_json(const RatVector& v);
Json to_json(const Inertia& in);

/// Named objects stored in a fixture under "divisors" / "curves".
std::map<std::string, Divisor> named_divisors(const Json& doc);
std::map<std::string, Curve> named_curves(const Json& doc);

}  // namespace tcx::io
