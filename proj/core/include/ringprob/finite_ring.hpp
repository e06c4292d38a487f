#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "ringprob/element_set.hpp"

namespace ringprob {

using RingId = std::uint64_t;

inline constexpr std::size_t kDefaultOrderCap = 256;

struct BuildOptions {
  // Axiom validation is O(n^3); refuse larger tables unless raised.
  std::size_t max_order = kDefaultOrderCap;
};

// Presentation of a ring on the additive group Z_{d_1} x ... x Z_{d_k}.
// products[i * k + j] holds the coordinates of e_i * e_j.
struct StructureConstants {
  std::vector<Index> moduli;
  std::vector<std::vector<Index>> products;

  std::size_t rank() const noexcept { return moduli.size(); }
  friend bool operator==(const StructureConstants&, const StructureConstants&) = default;
};

struct RingElement {
  Index index = 0;
  RingId ring = 0;

  friend bool operator==(const RingElement&, const RingElement&) = default;
};

// A finite ring stored as full Cayley tables. Immutable once validated;
// copies share the same RingId and compare as the same ring.
class FiniteRing {
 public:
  static FiniteRing from_tables(std::span<const std::vector<Index>> add,
                                std::span<const std::vector<Index>> mul,
                                const BuildOptions& options = {});
  static FiniteRing from_flat_tables(std::size_t order, std::vector<Index> add,
                                     std::vector<Index> mul,
                                     const BuildOptions& options = {});
  static FiniteRing from_structure_constants(const StructureConstants& sc,
                                             const BuildOptions& options = {});

  std::size_t order() const noexcept { return order_; }
  RingId id() const noexcept { return id_; }

  Index add(Index a, Index b) const noexcept { return add_[a * order_ + b]; }
  Index mul(Index a, Index b) const noexcept { return mul_[a * order_ + b]; }
  Index neg(Index a) const noexcept { return neg_[a]; }
  Index sub(Index a, Index b) const noexcept { return add(a, neg(b)); }
  // [a, b] = ab - ba
  Index commutator(Index a, Index b) const noexcept { return sub(mul(a, b), mul(b, a)); }

  RingElement element(Index i) const;
  RingElement add(RingElement a, RingElement b) const;
  RingElement neg(RingElement a) const;
  RingElement mul(RingElement a, RingElement b) const;
  RingElement commutator(RingElement a, RingElement b) const;
  // Throws RingMismatch when `e` belongs to another ring.
  Index index_of(RingElement e) const;

  // Smallest m >= 1 with m*a = 0.
  std::size_t additive_order(Index a) const noexcept;

  bool is_commutative() const noexcept;

  const std::optional<StructureConstants>& basis() const noexcept { return basis_; }
  // Mixed-radix coordinates, first coordinate most significant.
  std::vector<Index> coordinates(Index a) const;
  Index from_coordinates(std::span<const Index> coords) const;

  std::span<const Index> add_table() const noexcept { return add_; }
  std::span<const Index> mul_table() const noexcept { return mul_; }
  std::span<const Index> neg_table() const noexcept { return neg_; }

  // Re-runs the exhaustive axiom checks; throws on violation.
  void revalidate() const;

 private:
  FiniteRing() = default;
  static FiniteRing build(std::size_t order, std::vector<Index> add, std::vector<Index> mul,
                          std::optional<StructureConstants> basis,
                          const BuildOptions& options);
  void check_ring(RingElement e) const;

  std::size_t order_ = 0;
  RingId id_ = 0;
  std::vector<Index> add_;
  std::vector<Index> mul_;
  std::vector<Index> neg_;
  std::optional<StructureConstants> basis_;
};

using RingPtr = std::shared_ptr<const FiniteRing>;

inline RingPtr share(FiniteRing ring) { return std::make_shared<const FiniteRing>(std::move(ring)); }

// Componentwise ring on pairs; (i1, i2) is encoded as i1 * |R2| + i2.
FiniteRing direct_product(const FiniteRing& r1, const FiniteRing& r2,
                          const BuildOptions& options = {});

}  // namespace ringprob
