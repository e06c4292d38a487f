#include "ringprob/abelian_group.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "ringprob/errors.hpp"
#include "ringprob/finite_ring.hpp"

namespace ringprob {
namespace {

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> ps;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    ps.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

// Exact log_p(n), or -1 if n is not a power of p.
int exact_log(std::uint64_t n, std::uint64_t p) {
  int k = 0;
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  return n == 1 ? k : -1;
}

bool is_power_of(std::uint64_t n, std::uint64_t p) { return exact_log(n, p) >= 0; }

}  // namespace

IsoType iso_type_from_orders(std::span<const std::size_t> element_orders) {
  const std::uint64_t n = element_orders.size();
  if (n == 0) throw Error(ErrorKind::NotClosed, "empty group");
  std::map<std::uint64_t, std::uint64_t> order_count;
  for (auto o : element_orders) ++order_count[o];
  if (order_count[1] != 1) throw Error(ErrorKind::NotClosed, "group must have exactly one identity");

  // Per prime: exponents of the cyclic p-power factors, descending.
  std::vector<std::vector<std::uint64_t>> primary;  // p^e values
  std::uint64_t product = 1;
  for (std::uint64_t p : prime_factors(n)) {
    std::vector<int> s;  // s[k] = log_p #{x : ord(x) | p^k}
    s.push_back(0);
    std::uint64_t pk = 1;
    for (int k = 1;; ++k) {
      pk *= p;
      std::uint64_t c = 0;
      for (auto& [o, cnt] : order_count)
        if (is_power_of(o, p) && o <= pk) c += cnt;
      const int lg = exact_log(c, p);
      if (lg < 0) throw Error(ErrorKind::NotClosed, "element orders are not those of a group");
      if (lg == s.back()) break;
      s.push_back(lg);
    }
    // number of factors with exponent >= k is s[k] - s[k-1]
    std::vector<std::uint64_t> exps;
    const int kmax = static_cast<int>(s.size()) - 1;
    for (int k = kmax; k >= 1; --k) {
      const int ge_k = s[k] - s[k - 1];
      const int ge_next = k < kmax ? s[k + 1] - s[k] : 0;
      if (ge_k < ge_next) throw Error(ErrorKind::NotClosed, "inconsistent order multiset");
      for (int i = 0; i < ge_k - ge_next; ++i) {
        std::uint64_t v = 1;
        for (int j = 0; j < k; ++j) v *= p;
        exps.push_back(v);
      }
    }
    for (auto v : exps) product *= v;
    primary.push_back(std::move(exps));  // descending
  }
  if (product != n) throw Error(ErrorKind::NotClosed, "order multiset does not factor the group");

  std::size_t width = 0;
  for (auto& e : primary) width = std::max(width, e.size());
  IsoType out(width, 1);
  for (auto& e : primary)
    for (std::size_t i = 0; i < e.size(); ++i) out[i] *= e[i];
  std::reverse(out.begin(), out.end());
  return out;
}

std::string iso_type_text(const IsoType& t) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i];
  os << "]";
  return os.str();
}

AbelianGroup::AbelianGroup(std::size_t order, std::vector<Index> add_table, std::vector<Index> labels)
    : order_(order), add_(std::move(add_table)), labels_(std::move(labels)) {
  if (order_ == 0 || add_.size() != order_ * order_ || labels_.size() != order_)
    throw Error(ErrorKind::InvalidArgument, "malformed abelian group table");
  neg_.assign(order_, 0);
  element_order_.assign(order_, 0);
  for (Index a = 0; a < order_; ++a) {
    bool found = false;
    for (Index b = 0; b < order_; ++b)
      if (add(a, b) == 0) {
        neg_[a] = b;
        found = true;
        break;
      }
    if (!found) throw Error(ErrorKind::NotClosed, "element without additive inverse");
    std::size_t m = 1;
    for (Index x = a; x != 0; x = add(x, a)) {
      ++m;
      if (m > order_) throw Error(ErrorKind::NotClosed, "element of unbounded order");
    }
    element_order_[a] = m;
  }
  iso_type_ = iso_type_from_orders(element_order_);
}

AbelianGroup AbelianGroup::from_ring_subset(const FiniteRing& ring, const ElementSet& members) {
  const auto list = members.members();
  if (list.empty() || list.front() != 0)
    throw Error(ErrorKind::NotClosed, "additive subset must contain 0");
  const std::size_t m = list.size();
  std::vector<std::int64_t> local(ring.order(), -1);
  for (std::size_t i = 0; i < m; ++i) local[list[i]] = static_cast<std::int64_t>(i);
  std::vector<Index> table(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const auto l = local[ring.add(list[i], list[j])];
      if (l < 0) throw Error(ErrorKind::NotClosed, "subset not closed under addition");
      table[i * m + j] = static_cast<Index>(l);
    }
  return AbelianGroup(m, std::move(table), list);
}

std::int64_t AbelianGroup::local_of(Index label) const noexcept {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  return it == labels_.end() ? -1 : static_cast<std::int64_t>(it - labels_.begin());
}

bool is_isomorphism(const AbelianGroup& source, const AbelianGroup& target, const GroupIso& f) {
  const std::size_t n = source.order();
  if (target.order() != n || f.image.size() != n) return false;
  std::vector<char> hit(n, 0);
  for (Index a = 0; a < n; ++a) {
    if (f.image[a] >= n || hit[f.image[a]] != 0) return false;
    hit[f.image[a]] = 1;
  }
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      if (f(source.add(a, b)) != target.add(f(a), f(b))) return false;
  return true;
}

GroupIso inverse(const GroupIso& f) {
  GroupIso g{std::vector<Index>(f.image.size())};
  for (Index a = 0; a < f.image.size(); ++a) g.image[f.image[a]] = a;
  return g;
}

GroupIso identity_iso(const AbelianGroup& g) {
  GroupIso f{std::vector<Index>(g.order())};
  for (Index a = 0; a < g.order(); ++a) f.image[a] = a;
  return f;
}

std::vector<Index> generating_set(const AbelianGroup& g) {
  std::vector<char> in_span(g.order(), 0);
  std::vector<Index> span{0};
  in_span[0] = 1;
  std::vector<Index> gens;
  for (Index x = 1; x < g.order(); ++x) {
    if (in_span[x] != 0) continue;
    gens.push_back(x);
    for (std::size_t i = 0; i < span.size(); ++i)
      for (Index gen : gens) {
        const Index y = g.add(span[i], gen);
        if (in_span[y] == 0) {
          in_span[y] = 1;
          span.push_back(y);
        }
      }
  }
  return gens;
}

namespace {

struct IsoSearch {
  const AbelianGroup& source;
  const AbelianGroup& target;
  const std::function<bool(const GroupIso&)>& visit;
  std::vector<Index> gens;
  std::vector<Index> gen_images;
  bool stopped = false;

  static constexpr Index kUnset = static_cast<Index>(-1);

  // Closes the domain under adding every assigned generator. Returns false
  // on an inconsistency or a non-injective assignment.
  bool extend(std::vector<Index>& map, std::vector<char>& used, std::vector<Index>& domain) const {
    for (std::size_t i = 0; i < domain.size(); ++i) {
      const Index x = domain[i];
      for (std::size_t g = 0; g < gen_images.size(); ++g) {
        const Index y = source.add(x, gens[g]);
        const Index fy = target.add(map[x], gen_images[g]);
        if (map[y] == kUnset) {
          if (used[fy] != 0) return false;
          map[y] = fy;
          used[fy] = 1;
          domain.push_back(y);
        } else if (map[y] != fy) {
          return false;
        }
      }
    }
    return true;
  }

  void run(std::size_t depth, const std::vector<Index>& map, const std::vector<char>& used,
           const std::vector<Index>& domain) {
    if (stopped) return;
    if (depth == gens.size()) {
      if (domain.size() != source.order()) return;
      if (!visit(GroupIso{map})) stopped = true;
      return;
    }
    const std::size_t want = source.element_order(gens[depth]);
    for (Index h = 0; h < target.order() && !stopped; ++h) {
      if (target.element_order(h) != want) continue;
      auto m2 = map;
      auto u2 = used;
      auto d2 = domain;
      gen_images.push_back(h);
      if (extend(m2, u2, d2)) run(depth + 1, m2, u2, d2);
      gen_images.pop_back();
    }
  }
};

}  // namespace

void for_each_isomorphism(const AbelianGroup& source, const AbelianGroup& target,
                          const std::function<bool(const GroupIso&)>& visit,
                          bool prune_by_iso_type) {
  if (source.order() != target.order()) return;
  if (prune_by_iso_type && source.iso_type() != target.iso_type()) return;
  IsoSearch search{source, target, visit, generating_set(source), {}};
  std::vector<Index> map(source.order(), IsoSearch::kUnset);
  std::vector<char> used(target.order(), 0);
  map[0] = 0;
  used[0] = 1;
  search.run(0, map, used, {0});
}

std::vector<GroupIso> enumerate_group_isomorphisms(const AbelianGroup& source,
                                                   const AbelianGroup& target) {
  std::vector<GroupIso> out;
  for_each_isomorphism(source, target, [&](const GroupIso& f) {
    out.push_back(f);
    return true;
  });
  return out;
}

}  // namespace ringprob
