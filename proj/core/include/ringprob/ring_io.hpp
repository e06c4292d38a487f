#pragma once

#include <string>
#include <string_view>

#include "ringprob/catalog.hpp"

namespace ringprob {

// Plain-text ring files ('#' starts a comment):
//
//   ring <name>
//   moduli d1 d2 ... dk
//   mul i j = c1 c2 ... ck      (1-based basis indices; omitted products are 0)
//
// or
//
//   ring <name>
//   order n
//   add:
//   <n rows of n indices>
//   mul:
//   <n rows of n indices>
//
// Index 0 is the zero element. Parse failures throw ParseError naming the
// line; ring axiom violations propagate from FiniteRing.
CatalogEntry parse_ring_file(std::string_view text, const BuildOptions& options = {});
CatalogEntry load_ring_file(const std::string& path, const BuildOptions& options = {});

// Moduli form when the ring carries a basis, table form otherwise.
std::string serialize_ring(const CatalogEntry& entry);

}  // namespace ringprob
