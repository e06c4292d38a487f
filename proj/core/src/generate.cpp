#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "ringprob/catalog.hpp"
#include "ringprob/errors.hpp"

namespace ringprob {
namespace {

void groups_rec(std::size_t remaining, std::uint64_t prev, IsoType& seq, std::vector<IsoType>& out) {
  if (remaining == 1) {
    out.push_back(seq);
    return;
  }
  for (std::uint64_t d = std::max<std::uint64_t>(prev, 2); d <= remaining; ++d) {
    if (d % prev != 0 || remaining % d != 0) continue;
    seq.push_back(d);
    groups_rec(remaining / d, d, seq, out);
    seq.pop_back();
  }
}

// Group Z_{d_1} x ... x Z_{d_k} on mixed-radix indices.
struct CoordGroup {
  std::vector<Index> moduli;
  std::size_t order = 1;
  std::vector<std::vector<Index>> coords;

  explicit CoordGroup(std::vector<Index> d) : moduli(std::move(d)) {
    for (Index m : moduli) order *= m;
    coords.assign(order, std::vector<Index>(moduli.size()));
    for (std::size_t x = 0; x < order; ++x) {
      std::size_t rest = x;
      for (std::size_t t = moduli.size(); t-- > 0;) {
        coords[x][t] = static_cast<Index>(rest % moduli[t]);
        rest /= moduli[t];
      }
    }
    build_tables();
  }
  std::size_t rank() const { return moduli.size(); }
  Index encode(const std::vector<Index>& c) const {
    std::size_t idx = 0;
    for (std::size_t t = 0; t < moduli.size(); ++t) idx = idx * moduli[t] + c[t];
    return static_cast<Index>(idx);
  }
  Index basis(std::size_t i) const {
    std::vector<Index> c(rank(), 0);
    c[i] = 1;
    return encode(c);
  }
  Index add(Index a, Index b) const { return add_table[a * order + b]; }
  // m * a; the exponent of the group is the last modulus.
  Index scale(std::uint64_t m, Index a) const {
    return scale_table[(m % exponent) * order + a];
  }

  std::size_t exponent = 1;
  std::vector<Index> add_table;
  std::vector<Index> scale_table;

  void build_tables() {
    exponent = moduli.empty() ? 1 : moduli.back();
    add_table.resize(order * order);
    std::vector<Index> c(rank());
    for (std::size_t a = 0; a < order; ++a)
      for (std::size_t b = 0; b < order; ++b) {
        for (std::size_t t = 0; t < rank(); ++t) c[t] = (coords[a][t] + coords[b][t]) % moduli[t];
        add_table[a * order + b] = encode(c);
      }
    scale_table.assign(exponent * order, 0);
    for (std::size_t a = 0; a < order; ++a)
      for (std::size_t m = 1; m < exponent; ++m)
        scale_table[m * order + a] = add(scale_table[(m - 1) * order + a], static_cast<Index>(a));
  }
  AbelianGroup as_group() const {
    std::vector<Index> table(order * order), labels(order);
    for (Index a = 0; a < order; ++a) {
      labels[a] = a;
      for (Index b = 0; b < order; ++b) table[a * order + b] = add(a, b);
    }
    return AbelianGroup(order, std::move(table), std::move(labels));
  }
};

constexpr Index kUnset = static_cast<Index>(-1);

class TensorSearch {
 public:
  explicit TensorSearch(const CoordGroup& g) : g_(g), k_(g.rank()), c_(k_ * k_, kUnset) {
    candidates_.resize(k_ * k_);
    for (std::size_t i = 0; i < k_; ++i)
      for (std::size_t j = 0; j < k_; ++j) {
        const std::uint64_t a = std::gcd(g.moduli[i], g.moduli[j]);
        for (Index v = 0; v < g.order; ++v)
          if (g.scale(a, v) == 0) candidates_[i * k_ + j].push_back(v);
      }
  }

  template <typename Visit>
  void run(Visit&& visit) {
    recurse(0, visit);
  }

 private:
  // x * e_c for a group element x, if every needed constant is assigned.
  bool right_mul_basis(Index x, std::size_t c, Index& out) const {
    Index acc = 0;
    for (std::size_t t = 0; t < k_; ++t) {
      const Index coef = g_.coords[x][t];
      if (coef == 0) continue;
      const Index v = c_[t * k_ + c];
      if (v == kUnset) return false;
      acc = g_.add(acc, g_.scale(coef, v));
    }
    out = acc;
    return true;
  }
  bool left_mul_basis(std::size_t a, Index y, Index& out) const {
    Index acc = 0;
    for (std::size_t t = 0; t < k_; ++t) {
      const Index coef = g_.coords[y][t];
      if (coef == 0) continue;
      const Index v = c_[a * k_ + t];
      if (v == kUnset) return false;
      acc = g_.add(acc, g_.scale(coef, v));
    }
    out = acc;
    return true;
  }

  bool associative_so_far() const {
    for (std::size_t a = 0; a < k_; ++a)
      for (std::size_t b = 0; b < k_; ++b) {
        const Index ab = c_[a * k_ + b];
        if (ab == kUnset) continue;
        for (std::size_t c = 0; c < k_; ++c) {
          const Index bc = c_[b * k_ + c];
          if (bc == kUnset) continue;
          Index lhs = 0, rhs = 0;
          if (!right_mul_basis(ab, c, lhs) || !left_mul_basis(a, bc, rhs)) continue;
          if (lhs != rhs) return false;
        }
      }
    return true;
  }

  template <typename Visit>
  void recurse(std::size_t pos, Visit& visit) {
    if (pos == c_.size()) {
      visit(c_);
      return;
    }
    for (Index v : candidates_[pos]) {
      c_[pos] = v;
      if (associative_so_far()) recurse(pos + 1, visit);
    }
    c_[pos] = kUnset;
  }

  const CoordGroup& g_;
  std::size_t k_;
  std::vector<Index> c_;
  std::vector<std::vector<Index>> candidates_;
};

// Full multiplication table of the bilinear extension.
std::vector<Index> mul_table(const CoordGroup& g, const std::vector<Index>& c) {
  const std::size_t n = g.order, k = g.rank();
  std::vector<Index> t(n * n);
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y) {
      Index acc = 0;
      for (std::size_t i = 0; i < k; ++i) {
        if (g.coords[x][i] == 0) continue;
        for (std::size_t j = 0; j < k; ++j) {
          const std::uint64_t coef = std::uint64_t{g.coords[x][i]} * g.coords[y][j];
          if (coef != 0) acc = g.add(acc, g.scale(coef, c[i * k + j]));
        }
      }
      t[x * n + y] = acc;
    }
  return t;
}

}  // namespace

std::vector<IsoType> abelian_groups_of_order(std::size_t n) {
  std::vector<IsoType> out;
  if (n == 0) return out;
  IsoType seq;
  groups_rec(n, 1, seq, out);
  return out;
}

std::vector<FiniteRing> generate_rings(std::size_t additive_order, std::size_t cap) {
  if (additive_order == 0) throw Error(ErrorKind::InvalidArgument, "order must be >= 1");
  if (additive_order > cap)
    throw Error(ErrorKind::CapExceeded,
                "ring generation capped at order " + std::to_string(cap));
  std::vector<FiniteRing> out;
  if (additive_order == 1) {
    out.push_back(FiniteRing::from_flat_tables(1, {0}, {0}));
    return out;
  }
  for (const auto& iso : abelian_groups_of_order(additive_order)) {
    const CoordGroup g(std::vector<Index>(iso.begin(), iso.end()));
    const std::size_t k = g.rank(), n = g.order;

    // Automorphisms as (sigma, sigma^{-1}) element permutations.
    std::vector<std::pair<std::vector<Index>, std::vector<Index>>> autos;
    const auto ag = g.as_group();
    for_each_isomorphism(ag, ag, [&](const GroupIso& f) {
      autos.emplace_back(f.image, inverse(f).image);
      return true;
    });
    std::vector<Index> basis(k);
    for (std::size_t i = 0; i < k; ++i) basis[i] = g.basis(i);

    std::set<std::vector<Index>> canon;
    TensorSearch search(g);
    search.run([&](const std::vector<Index>& c) {
      const auto mt = mul_table(g, c);
      std::vector<Index> best, key(k * k);
      for (const auto& [sigma, sigma_inv] : autos) {
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j)
            key[i * k + j] = sigma[mt[sigma_inv[basis[i]] * n + sigma_inv[basis[j]]]];
        if (best.empty() || key < best) best = key;
      }
      canon.insert(std::move(best));
    });

    for (const auto& key : canon) {
      StructureConstants sc{g.moduli, {}};
      for (Index v : key) sc.products.push_back(g.coords[v]);
      out.push_back(FiniteRing::from_structure_constants(sc));
    }
  }
  return out;
}

}  // namespace ringprob
