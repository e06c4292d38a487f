#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ringprob/abelian_group.hpp"
#include "ringprob/element_set.hpp"
#include "ringprob/finite_ring.hpp"

namespace ringprob {

// A subset of a parent ring closed under +, - and *.
class Subring {
 public:
  // Validates closure; throws NotClosed.
  static Subring from_members(RingPtr ring, const ElementSet& members);
  static Subring from_indices(RingPtr ring, std::span<const Index> members);
  static Subring whole(RingPtr ring);
  static Subring zero(RingPtr ring);

  const FiniteRing& ring() const noexcept { return *ring_; }
  const RingPtr& ring_ptr() const noexcept { return ring_; }
  RingId ring_id() const noexcept { return ring_->id(); }

  const ElementSet& bits() const noexcept { return bits_; }
  std::span<const Index> members() const noexcept { return list_; }
  std::size_t size() const noexcept { return list_.size(); }
  bool contains(Index i) const noexcept { return bits_.contains(i); }
  bool is_subset_of(const Subring& other) const;
  bool is_whole() const noexcept { return size() == ring_->order(); }
  bool is_commutative() const noexcept;

  // Re-checks the closure invariant by scanning.
  bool is_closed() const noexcept;

  friend bool operator==(const Subring& a, const Subring& b) {
    return a.ring_id() == b.ring_id() && a.bits_ == b.bits_;
  }

 private:
  Subring(RingPtr ring, ElementSet bits);
  friend Subring closure(const Subring& base, std::span<const Index> extra);

  RingPtr ring_;
  ElementSet bits_;
  std::vector<Index> list_;
};

// A subgroup of (R, +).
struct AdditiveSubgroup {
  RingPtr ring;
  ElementSet members;
  IsoType iso_type;

  std::size_t size() const noexcept { return members.count(); }
  bool contains(Index i) const noexcept { return members.contains(i); }
};

// Additive cosets of `modulus` inside `parent`. Cosets are numbered by
// ascending representative; the representative is the least index.
struct QuotientGroup {
  RingPtr ring;
  ElementSet parent;
  ElementSet modulus;
  std::vector<Index> representatives;
  std::vector<std::int64_t> coset_of;  // per ring element; -1 outside parent
  IsoType iso_type;

  std::size_t size() const noexcept { return representatives.size(); }
  // Cayley table view; labels are the representatives.
  AbelianGroup as_group() const;
};

// Factor ring R/I with the element-to-coset projection.
struct QuotientRing {
  RingPtr ring;
  std::vector<Index> projection;

  // Image of a subring of the parent containing I.
  Subring image(const Subring& s) const;
  Index project(Index x) const { return projection[x]; }
};

ElementSet additive_span(const FiniteRing& ring, std::span<const Index> generators);

Subring closure(const RingPtr& ring, std::span<const Index> generators);
Subring closure(const Subring& base, std::span<const Index> extra);

inline constexpr std::size_t kDefaultSubringCap = 64;

// Every subring, ordered by size then by member list. Throws CapExceeded.
std::vector<Subring> enumerate_subrings(const RingPtr& ring,
                                        std::size_t order_cap = kDefaultSubringCap);

Subring center(const RingPtr& ring);
Subring centralizer(const Subring& s, RingElement r);
Subring relative_center(const Subring& s, const Subring& k);

// {[s, k] : k in K}
AdditiveSubgroup commutator_image(RingElement s, const Subring& k);
// Additive closure of {[s, k] : s in S, k in K}.
AdditiveSubgroup commutator_subgroup(const Subring& s, const Subring& k);
// {k in K : [s, k] = r}
ElementSet t_set(RingElement s, RingElement r, const Subring& k);

bool is_ideal(const Subring& i);
QuotientRing quotient_ring(const Subring& ideal);

QuotientGroup quotient_group(const RingPtr& ring, const ElementSet& parent, const ElementSet& modulus);
QuotientGroup quotient_group(const Subring& g, const Subring& h);
QuotientGroup quotient_group(const Subring& g, const AdditiveSubgroup& h);

IsoType abelian_iso_type(const FiniteRing& ring, const ElementSet& members);

void require_same_ring(RingId a, RingId b);

}  // namespace ringprob
