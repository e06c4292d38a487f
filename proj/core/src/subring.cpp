#include "ringprob/subring.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "ringprob/errors.hpp"

namespace ringprob {

void require_same_ring(RingId a, RingId b) {
  if (a != b) throw Error(ErrorKind::RingMismatch, "operands belong to different rings");
}

Subring::Subring(RingPtr ring, ElementSet bits)
    : ring_(std::move(ring)), bits_(std::move(bits)), list_(bits_.members()) {}

Subring Subring::from_members(RingPtr ring, const ElementSet& members) {
  if (members.universe() != ring->order())
    throw Error(ErrorKind::InvalidArgument, "member set sized for another ring");
  Subring s(std::move(ring), members);
  if (!s.contains(0) || !s.is_closed())
    throw Error(ErrorKind::NotClosed, "member set is not a subring");
  return s;
}

Subring Subring::from_indices(RingPtr ring, std::span<const Index> members) {
  ElementSet bits(ring->order());
  for (Index i : members) {
    if (i >= ring->order()) throw Error(ErrorKind::InvalidArgument, "element index out of range");
    bits.insert(i);
  }
  return from_members(std::move(ring), bits);
}

Subring Subring::whole(RingPtr ring) {
  auto bits = ElementSet::full(ring->order());
  return Subring(std::move(ring), std::move(bits));
}

Subring Subring::zero(RingPtr ring) {
  ElementSet bits(ring->order());
  bits.insert(0);
  return Subring(std::move(ring), std::move(bits));
}

bool Subring::is_subset_of(const Subring& other) const {
  require_same_ring(ring_id(), other.ring_id());
  return bits_.is_subset_of(other.bits_);
}

bool Subring::is_commutative() const noexcept {
  for (std::size_t i = 0; i < list_.size(); ++i)
    for (std::size_t j = i + 1; j < list_.size(); ++j)
      if (ring_->mul(list_[i], list_[j]) != ring_->mul(list_[j], list_[i])) return false;
  return true;
}

bool Subring::is_closed() const noexcept {
  const auto& r = *ring_;
  for (Index a : list_) {
    if (!contains(r.neg(a))) return false;
    for (Index b : list_)
      if (!contains(r.add(a, b)) || !contains(r.mul(a, b))) return false;
  }
  return true;
}

ElementSet additive_span(const FiniteRing& ring, std::span<const Index> generators) {
  ElementSet bits(ring.order());
  bits.insert(0);
  std::vector<Index> list{0};
  for (Index g : generators) {
    if (bits.contains(g)) continue;
    // list is a subgroup; add cosets x + k*g until closed
    for (std::size_t i = 0; i < list.size(); ++i) {
      const Index y = ring.add(list[i], g);
      if (!bits.contains(y)) {
        bits.insert(y);
        list.push_back(y);
      }
    }
  }
  return bits;
}

Subring closure(const Subring& base, std::span<const Index> extra) {
  const auto& r = base.ring();
  ElementSet bits = base.bits();
  std::vector<Index> list(base.members().begin(), base.members().end());
  const std::size_t first_new = list.size();
  for (Index x : extra) {
    if (x >= r.order()) throw Error(ErrorKind::InvalidArgument, "generator index out of range");
    if (!bits.contains(x)) {
      bits.insert(x);
      list.push_back(x);
    }
  }
  auto push = [&](Index v) {
    if (!bits.contains(v)) {
      bits.insert(v);
      list.push_back(v);
    }
  };
  for (std::size_t i = first_new; i < list.size(); ++i) {
    const Index y = list[i];
    push(r.neg(y));
    for (std::size_t j = 0; j <= i; ++j) {
      const Index z = list[j];
      push(r.add(y, z));
      push(r.mul(y, z));
      push(r.mul(z, y));
    }
  }
  return Subring(base.ring_ptr(), std::move(bits));
}

Subring closure(const RingPtr& ring, std::span<const Index> generators) {
  return closure(Subring::zero(ring), generators);
}

std::vector<Subring> enumerate_subrings(const RingPtr& ring, std::size_t order_cap) {
  if (ring->order() > order_cap)
    throw Error(ErrorKind::CapExceeded, "subring enumeration capped at order " +
                                            std::to_string(order_cap));
  std::vector<Subring> found{Subring::zero(ring)};
  std::unordered_set<ElementSet, ElementSetHash> seen{found.front().bits()};
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (Index x = 0; x < ring->order(); ++x) {
      if (found[i].contains(x)) continue;
      const Index gen[] = {x};
      Subring next = closure(found[i], gen);
      if (seen.insert(next.bits()).second) found.push_back(std::move(next));
    }
  }
  std::sort(found.begin(), found.end(), [](const Subring& a, const Subring& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.members().begin(), a.members().end(),
                                        b.members().begin(), b.members().end());
  });
  return found;
}

Subring center(const RingPtr& ring) {
  return relative_center(Subring::whole(ring), Subring::whole(ring));
}

Subring centralizer(const Subring& s, RingElement r) {
  const auto& ring = s.ring();
  const Index x = ring.index_of(r);
  ElementSet bits(ring.order());
  for (Index a : s.members())
    if (ring.commutator(a, x) == 0) bits.insert(a);
  return Subring::from_members(s.ring_ptr(), bits);
}

Subring relative_center(const Subring& s, const Subring& k) {
  require_same_ring(s.ring_id(), k.ring_id());
  const auto& ring = s.ring();
  ElementSet bits(ring.order());
  for (Index a : s.members()) {
    bool central = true;
    for (Index b : k.members())
      if (ring.commutator(a, b) != 0) {
        central = false;
        break;
      }
    if (central) bits.insert(a);
  }
  return Subring::from_members(s.ring_ptr(), bits);
}

AdditiveSubgroup commutator_image(RingElement s, const Subring& k) {
  const auto& ring = k.ring();
  const Index x = ring.index_of(s);
  ElementSet bits(ring.order());
  for (Index b : k.members()) bits.insert(ring.commutator(x, b));
  auto iso = abelian_iso_type(ring, bits);
  return {k.ring_ptr(), std::move(bits), std::move(iso)};
}

AdditiveSubgroup commutator_subgroup(const Subring& s, const Subring& k) {
  require_same_ring(s.ring_id(), k.ring_id());
  const auto& ring = s.ring();
  ElementSet raw(ring.order());
  for (Index a : s.members())
    for (Index b : k.members()) raw.insert(ring.commutator(a, b));
  const auto gens = raw.members();
  auto bits = additive_span(ring, gens);
  auto iso = abelian_iso_type(ring, bits);
  return {s.ring_ptr(), std::move(bits), std::move(iso)};
}

ElementSet t_set(RingElement s, RingElement r, const Subring& k) {
  const auto& ring = k.ring();
  const Index x = ring.index_of(s);
  const Index target = ring.index_of(r);
  ElementSet out(ring.order());
  for (Index b : k.members())
    if (ring.commutator(x, b) == target) out.insert(b);
  return out;
}

bool is_ideal(const Subring& i) {
  const auto& ring = i.ring();
  for (Index a : i.members())
    for (Index x = 0; x < ring.order(); ++x)
      if (!i.contains(ring.mul(x, a)) || !i.contains(ring.mul(a, x))) return false;
  return true;
}

QuotientRing quotient_ring(const Subring& ideal) {
  if (!is_ideal(ideal)) throw Error(ErrorKind::NotAnIdeal, "subring is not a two-sided ideal");
  const auto& ring = ideal.ring();
  const auto q = quotient_group(ideal.ring_ptr(), ElementSet::full(ring.order()), ideal.bits());
  const std::size_t m = q.size();
  std::vector<Index> add(m * m), mul(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      const Index ra = q.representatives[a], rb = q.representatives[b];
      add[a * m + b] = static_cast<Index>(q.coset_of[ring.add(ra, rb)]);
      mul[a * m + b] = static_cast<Index>(q.coset_of[ring.mul(ra, rb)]);
    }
  BuildOptions opts;
  opts.max_order = std::max(opts.max_order, m);
  QuotientRing out{share(FiniteRing::from_flat_tables(m, std::move(add), std::move(mul), opts)), {}};
  out.projection.resize(ring.order());
  for (Index x = 0; x < ring.order(); ++x) out.projection[x] = static_cast<Index>(q.coset_of[x]);
  return out;
}

Subring QuotientRing::image(const Subring& s) const {
  std::vector<Index> img;
  img.reserve(s.size());
  for (Index x : s.members()) img.push_back(projection[x]);
  return Subring::from_indices(ring, img);
}

QuotientGroup quotient_group(const RingPtr& ring, const ElementSet& parent, const ElementSet& modulus) {
  if (!modulus.is_subset_of(parent) || !modulus.contains(0))
    throw Error(ErrorKind::NotASubgroup, "modulus is not contained in the parent group");
  const auto plist = parent.members();
  const auto mlist = modulus.members();
  for (Index a : mlist)
    for (Index b : mlist)
      if (!modulus.contains(ring->add(a, b)))
        throw Error(ErrorKind::NotASubgroup, "modulus is not closed under addition");
  for (Index a : plist)
    for (Index b : plist)
      if (!parent.contains(ring->add(a, b)))
        throw Error(ErrorKind::NotASubgroup, "parent is not closed under addition");

  QuotientGroup q{ring, parent, modulus, {}, std::vector<std::int64_t>(ring->order(), -1), {}};
  for (Index x : plist) {
    if (q.coset_of[x] >= 0) continue;
    const auto c = static_cast<std::int64_t>(q.representatives.size());
    q.representatives.push_back(x);
    for (Index m : mlist) q.coset_of[ring->add(x, m)] = c;
  }
  q.iso_type = q.as_group().iso_type();
  return q;
}

QuotientGroup quotient_group(const Subring& g, const Subring& h) {
  require_same_ring(g.ring_id(), h.ring_id());
  return quotient_group(g.ring_ptr(), g.bits(), h.bits());
}

QuotientGroup quotient_group(const Subring& g, const AdditiveSubgroup& h) {
  require_same_ring(g.ring_id(), h.ring->id());
  return quotient_group(g.ring_ptr(), g.bits(), h.members);
}

AbelianGroup QuotientGroup::as_group() const {
  const std::size_t m = representatives.size();
  std::vector<Index> table(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      table[a * m + b] =
          static_cast<Index>(coset_of[ring->add(representatives[a], representatives[b])]);
  return AbelianGroup(m, std::move(table), representatives);
}

IsoType abelian_iso_type(const FiniteRing& ring, const ElementSet& members) {
  return AbelianGroup::from_ring_subset(ring, members).iso_type();
}

}  // namespace ringprob
