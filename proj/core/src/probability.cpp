#include "ringprob/probability.hpp"

#include "ringprob/errors.hpp"

namespace ringprob {

CentralizerCache::CentralizerCache(Subring k)
    : k_(std::move(k)), centralizer_(k_.ring().order()), image_(k_.ring().order()) {}

void CentralizerCache::fill(Index x) {
  const auto& ring = k_.ring();
  ElementSet c(ring.order()), img(ring.order());
  for (Index b : k_.members()) {
    const Index v = ring.commutator(x, b);
    if (v == 0) c.insert(b);
    img.insert(v);
  }
  centralizer_[x] = std::move(c);
  image_[x] = std::move(img);
}

const ElementSet& CentralizerCache::centralizer(Index x) {
  if (!centralizer_.at(x)) fill(x);
  return *centralizer_[x];
}

const ElementSet& CentralizerCache::image(Index x) {
  if (!image_.at(x)) fill(x);
  return *image_[x];
}

ProbValue pr_r_naive(const Subring& s, const Subring& k, RingElement r) {
  require_same_ring(s.ring_id(), k.ring_id());
  const auto& ring = s.ring();
  const Index target = ring.index_of(r);
  std::uint64_t count = 0;
  for (Index a : s.members())
    for (Index b : k.members())
      if (ring.commutator(a, b) == target) ++count;
  return {BigInt(count), BigInt(std::uint64_t{s.size()} * k.size())};
}

ProbValue pr_r_formula(const Subring& s, CentralizerCache& k_cache, Index r) {
  const auto& k = k_cache.subring();
  require_same_ring(s.ring_id(), k.ring_id());
  std::uint64_t sum = 0;
  for (Index a : s.members())
    if (k_cache.image(a).contains(r)) sum += k_cache.centralizer_size(a);
  return {BigInt(sum), BigInt(std::uint64_t{s.size()} * k.size())};
}

ProbValue pr_r_formula(const Subring& s, const Subring& k, RingElement r) {
  CentralizerCache cache(k);
  return pr_r_formula(s, cache, k.ring().index_of(r));
}

ProbValue pr_r(const Subring& s, CentralizerCache& k_cache, Index r) {
  auto value = pr_r_formula(s, k_cache, r);
#ifndef NDEBUG
  const auto& k = k_cache.subring();
  if (pr_r_naive(s, k, k.ring().element(r)) != value)
    throw Error(ErrorKind::CrossCheckFailed, "formula and pair count disagree");
#endif
  return value;
}

ProbValue pr(const Subring& s, CentralizerCache& k_cache) {
  return pr_r_formula(s, k_cache, 0);
}

ProbValue pr(const Subring& s, const Subring& k) {
  CentralizerCache cache(k);
  return pr(s, cache);
}

Rational pr_from_image_sizes(const Subring& s, CentralizerCache& k_cache) {
  require_same_ring(s.ring_id(), k_cache.subring().ring_id());
  Rational sum = 0;
  for (Index a : s.members()) sum += Rational(1, k_cache.image_size(a));
  return sum / s.size();
}

ProbValue PrDistribution::at(Index r) const {
  const auto it = entries.find(r);
  if (it != entries.end()) return it->second;
  return {BigInt(0), BigInt(std::uint64_t{s_size} * k_size)};
}

PrDistribution pr_distribution(const Subring& s, const Subring& k) {
  require_same_ring(s.ring_id(), k.ring_id());
  const auto& ring = s.ring();
  std::vector<std::uint64_t> tally(ring.order(), 0);
  for (Index a : s.members())
    for (Index b : k.members()) ++tally[ring.commutator(a, b)];
  PrDistribution d;
  d.ring = ring.id();
  d.s_size = s.size();
  d.k_size = k.size();
  d.support = ElementSet(ring.order());
  const BigInt total(std::uint64_t{s.size()} * k.size());
  for (Index r = 0; r < ring.order(); ++r) {
    if (tally[r] == 0) continue;
    d.support.insert(r);
    d.entries.emplace(r, ProbValue(BigInt(tally[r]), total));
  }
  return d;
}

Subring product_subring(const RingPtr& product, const Subring& a, const Subring& b) {
  const std::size_t n2 = b.ring().order();
  if (product->order() != a.ring().order() * n2)
    throw Error(ErrorKind::RingMismatch, "product ring has the wrong order");
  std::vector<Index> members;
  members.reserve(a.size() * b.size());
  for (Index x : a.members())
    for (Index y : b.members()) members.push_back(static_cast<Index>(x * n2 + y));
  return Subring::from_indices(product, members);
}

ProbValue pr_r_product(const Subring& s1, const Subring& k1, RingElement r1,
                       const Subring& s2, const Subring& k2, RingElement r2) {
  const auto p1 = pr_r_formula(s1, k1, r1);
  const auto p2 = pr_r_formula(s2, k2, r2);
  ProbValue combined(p1.raw_count() * p2.raw_count(), p1.raw_total() * p2.raw_total());

  BuildOptions opts;
  opts.max_order = std::max(opts.max_order, s1.ring().order() * s2.ring().order());
  const auto product = share(direct_product(s1.ring(), s2.ring(), opts));
  const Index r = static_cast<Index>(s1.ring().index_of(r1) * s2.ring().order() +
                                     s2.ring().index_of(r2));
  const auto brute = pr_r_naive(product_subring(product, s1, s2),
                                product_subring(product, k1, k2), product->element(r));
  if (brute != combined)
    throw Error(ErrorKind::CrossCheckFailed,
                "product ring count " + brute.fraction() + " != " + combined.fraction());
  return combined;
}

}  // namespace ringprob
