#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "ringprob/element_set.hpp"

namespace ringprob {

class FiniteRing;

// Invariant factors d_1 | d_2 | ... | d_m, ascending; empty for the trivial group.
using IsoType = std::vector<std::uint64_t>;

// Classifies a finite abelian group from the multiset of its element orders.
// Throws NotClosed if the multiset is not that of an abelian group.
IsoType iso_type_from_orders(std::span<const std::size_t> element_orders);

std::string iso_type_text(const IsoType& t);

// Finite abelian group on local indices 0..order-1 with identity 0. `labels`
// records what each local element stands for (a ring element, or a coset
// representative).
class AbelianGroup {
 public:
  AbelianGroup(std::size_t order, std::vector<Index> add_table, std::vector<Index> labels);

  // The additive group of `members` (must contain 0 and be closed).
  static AbelianGroup from_ring_subset(const FiniteRing& ring, const ElementSet& members);

  std::size_t order() const noexcept { return order_; }
  Index add(Index a, Index b) const noexcept { return add_[a * order_ + b]; }
  Index neg(Index a) const noexcept { return neg_[a]; }
  std::size_t element_order(Index a) const noexcept { return element_order_[a]; }
  const std::vector<Index>& labels() const noexcept { return labels_; }
  // Local index of a label, or -1.
  std::int64_t local_of(Index label) const noexcept;
  const IsoType& iso_type() const noexcept { return iso_type_; }

 private:
  std::size_t order_;
  std::vector<Index> add_;
  std::vector<Index> neg_;
  std::vector<std::size_t> element_order_;
  std::vector<Index> labels_;
  IsoType iso_type_;
};

// An additive isomorphism between two AbelianGroups, as local index images.
struct GroupIso {
  std::vector<Index> image;

  Index operator()(Index a) const { return image[a]; }
  friend bool operator==(const GroupIso&, const GroupIso&) = default;
};

bool is_isomorphism(const AbelianGroup& source, const AbelianGroup& target, const GroupIso& f);
GroupIso inverse(const GroupIso& f);
GroupIso identity_iso(const AbelianGroup& g);

// Greedy generating set, ascending local index.
std::vector<Index> generating_set(const AbelianGroup& g);

// Visits every isomorphism source -> target in a deterministic order; the
// visitor returns false to stop. Nothing is visited when iso types differ.
void for_each_isomorphism(const AbelianGroup& source, const AbelianGroup& target,
                          const std::function<bool(const GroupIso&)>& visit,
                          bool prune_by_iso_type = true);

std::vector<GroupIso> enumerate_group_isomorphisms(const AbelianGroup& source,
                                                   const AbelianGroup& target);

}  // namespace ringprob
