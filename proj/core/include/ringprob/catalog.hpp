#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ringprob/abelian_group.hpp"
#include "ringprob/finite_ring.hpp"

namespace ringprob {

enum class Provenance { Builtin, File, Generated };

std::string_view to_string(Provenance p) noexcept;

struct CatalogEntry {
  std::string name;
  RingPtr ring;
  Provenance provenance = Provenance::Builtin;
  std::string notes;
};

// Names: zn(n), nc4a, ut2(n) upper-triangular 2x2 over Z_n, m2(n) all 2x2
// over Z_n, row2(n) with (x,y)(x',y') = (xx', xy'). nc4a is row2(2).
FiniteRing builtin(std::string_view name, std::span<const std::uint64_t> params = {},
                   const BuildOptions& options = {});

// "zn:6", "nc4a", "nc4a*zn:2" (factors joined by '*').
FiniteRing builtin_from_spec(std::string_view spec, const BuildOptions& options = {});

class Catalog {
 public:
  // Throws InvalidArgument on a duplicate name.
  void add(CatalogEntry entry);
  void add_builtin(std::string_view spec, const BuildOptions& options = {});

  const std::vector<CatalogEntry>& entries() const noexcept { return entries_; }
  const CatalogEntry* find(std::string_view name) const noexcept;
  std::size_t size() const noexcept { return entries_.size(); }

 private:
  std::vector<CatalogEntry> entries_;
};

// Invariant-factor lists of every abelian group of order n.
std::vector<IsoType> abelian_groups_of_order(std::size_t n);

inline constexpr std::size_t kDefaultGenerationCap = 8;

// All rings of the given order up to isomorphism, each validated. The
// isomorphism test is exhaustive over additive automorphisms (exponential).
std::vector<FiniteRing> generate_rings(std::size_t additive_order,
                                       std::size_t cap = kDefaultGenerationCap);

}  // namespace ringprob
