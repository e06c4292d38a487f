#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "ringprob/element_set.hpp"
#include "ringprob/prob_value.hpp"
#include "ringprob/subring.hpp"

namespace ringprob {

// Memoizes C_K(x) and [x, K] for one subring K, lazily per ring element.
// Not thread-safe; give each worker its own cache.
class CentralizerCache {
 public:
  explicit CentralizerCache(Subring k);

  const Subring& subring() const noexcept { return k_; }
  const ElementSet& centralizer(Index x);
  std::size_t centralizer_size(Index x) { return centralizer(x).count(); }
  const ElementSet& image(Index x);
  std::size_t image_size(Index x) { return image(x).count(); }

 private:
  void fill(Index x);

  Subring k_;
  std::vector<std::optional<ElementSet>> centralizer_;
  std::vector<std::optional<ElementSet>> image_;
};

// Pr_r(S, K) by counting all |S||K| pairs.
ProbValue pr_r_naive(const Subring& s, const Subring& k, RingElement r);

// Pr_r(S, K) = (1/|S||K|) * sum over s in S with r in [s,K] of |C_K(s)|.
ProbValue pr_r_formula(const Subring& s, const Subring& k, RingElement r);
ProbValue pr_r_formula(const Subring& s, CentralizerCache& k_cache, Index r);

// Formula path; debug builds also run the naive count and throw
// CrossCheckFailed on disagreement.
ProbValue pr_r(const Subring& s, CentralizerCache& k_cache, Index r);

// Pr(S, K) = (1/|S||K|) * sum_{s in S} |C_K(s)|.
ProbValue pr(const Subring& s, const Subring& k);
ProbValue pr(const Subring& s, CentralizerCache& k_cache);
// (1/|S|) * sum_{s in S} 1/|[s, K]|.
Rational pr_from_image_sizes(const Subring& s, CentralizerCache& k_cache);

struct PrDistribution {
  RingId ring = 0;
  std::size_t s_size = 0;
  std::size_t k_size = 0;
  std::map<Index, ProbValue> entries;  // nonzero entries only
  ElementSet support;                  // {[s,k] : s in S, k in K}

  // Zero for elements outside the support.
  ProbValue at(Index r) const;
};

PrDistribution pr_distribution(const Subring& s, const Subring& k);

// Subring S1 x S2 of the product ring built by direct_product.
Subring product_subring(const RingPtr& product, const Subring& a, const Subring& b);

// Pr_{r1}(S1,K1) * Pr_{r2}(S2,K2), confirmed against a naive count on the
// direct product ring (CrossCheckFailed otherwise).
ProbValue pr_r_product(const Subring& s1, const Subring& k1, RingElement r1,
                       const Subring& s2, const Subring& k2, RingElement r2);

}  // namespace ringprob
