#pragma once

#include <string>

#include "tcx/io.hpp"
#include "oracles.hpp"

namespace support {

inline std::string fixture(const std::string& name) { return std::string(TCX_FIXTURE_DIR) + "/" + name; }

inline tcx::io::Json load(const std::string& name) { return tcx::io::load_file(fixture(name)); }

inline tcx::TropicalStructure structure(const std::string& name) { return tcx::io::structure_from(load(name)); }

inline tcx::EmbeddedComplex embedded(const std::string& name) {
  return tcx::EmbeddedComplex::build(tcx::io::embedded_from(load(name)));
}

// (ridge, vertex) keyed constants, meaningful on regular complexes.
inline oracle::VertexAlpha vertex_alpha(const tcx::TropicalStructure& t) {
  oracle::VertexAlpha out;
  for (const auto& e : t.entries()) out[{e.ridge, t.complex().vertices({t.n() - 1, e.ridge})[static_cast<std::size_t>(e.slot)]}] = e.value;
  return out;
}

inline tcx::Divisor ridges(std::initializer_list<std::pair<std::size_t, long>> terms) {
  tcx::Divisor d;
  for (const auto& [r, c] : terms) d.add(r, c);
  return d;
}

}  // namespace support
