#include "ringprob/finite_ring.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <sstream>
#include <utility>

#include "ringprob/errors.hpp"

namespace ringprob {
namespace {

RingId next_ring_id() {
  static std::atomic<RingId> counter{1};
  return counter.fetch_add(1, std::memory_order_relaxed);
}

template <typename... Ts>
std::string tuple_text(const char* what, Ts... xs) {
  std::ostringstream os;
  os << what << " at (";
  bool first = true;
  ((os << (first ? "" : ", ") << xs, first = false), ...);
  os << ")";
  return os.str();
}

// Exhaustive axiom check. Assumes entries are in range and 0 is the
// additive identity candidate.
void validate_tables(std::size_t n, const std::vector<Index>& add, const std::vector<Index>& mul) {
  auto A = [&](std::size_t a, std::size_t b) { return add[a * n + b]; };
  auto M = [&](std::size_t a, std::size_t b) { return mul[a * n + b]; };

  std::vector<char> seen(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t b = 0; b < n; ++b) {
      if (seen[A(a, b)] != 0)
        throw Error(ErrorKind::NotAbelianGroup, tuple_text("add row is not a permutation", a, b));
      seen[A(a, b)] = 1;
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (A(0, a) != a || A(a, 0) != a)
      throw Error(ErrorKind::NotAbelianGroup, tuple_text("0 is not an additive identity", a));
    for (std::size_t b = a + 1; b < n; ++b)
      if (A(a, b) != A(b, a))
        throw Error(ErrorKind::NotAbelianGroup, tuple_text("addition not commutative", a, b));
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (A(A(a, b), c) != A(a, A(b, c)))
          throw Error(ErrorKind::NotAbelianGroup,
                      tuple_text("addition not associative", a, b, c));

  for (std::size_t a = 0; a < n; ++a)
    if (M(0, a) != 0 || M(a, 0) != 0)
      throw Error(ErrorKind::ZeroNotAbsorbing, tuple_text("0*x or x*0 is nonzero", a));

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t ab = M(a, b);
      for (std::size_t c = 0; c < n; ++c)
        if (M(ab, c) != M(a, M(b, c)))
          throw Error(ErrorKind::NotAssociative,
                      tuple_text("multiplication not associative", a, b, c));
    }

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        const std::size_t bc = A(b, c);
        if (M(a, bc) != A(M(a, b), M(a, c)))
          throw Error(ErrorKind::NotDistributive, tuple_text("a(b+c) != ab+ac", a, b, c));
        if (M(bc, a) != A(M(b, a), M(c, a)))
          throw Error(ErrorKind::NotDistributive, tuple_text("(b+c)a != ba+ca", b, c, a));
      }
}

std::size_t checked_order(const std::vector<Index>& moduli, const BuildOptions& options) {
  std::size_t order = 1;
  for (Index d : moduli) {
    if (d < 2) throw Error(ErrorKind::InvalidArgument, "moduli must be >= 2");
    if (order * d > options.max_order)
      throw Error(ErrorKind::CapExceeded, "ring order exceeds cap " +
                                              std::to_string(options.max_order));
    order *= d;
  }
  return order;
}

std::vector<std::vector<Index>> all_coordinates(const std::vector<Index>& moduli, std::size_t order) {
  std::vector<std::vector<Index>> coords(order, std::vector<Index>(moduli.size(), 0));
  for (std::size_t x = 0; x < order; ++x) {
    std::size_t rest = x;
    for (std::size_t t = moduli.size(); t-- > 0;) {
      coords[x][t] = static_cast<Index>(rest % moduli[t]);
      rest /= moduli[t];
    }
  }
  return coords;
}

Index encode(const std::vector<Index>& moduli, const std::vector<Index>& c) {
  std::size_t idx = 0;
  for (std::size_t t = 0; t < moduli.size(); ++t) idx = idx * moduli[t] + c[t];
  return static_cast<Index>(idx);
}

struct Tables {
  std::vector<Index> add;
  std::vector<Index> mul;
};

Tables tables_from_constants(const StructureConstants& sc, std::size_t order) {
  const auto& d = sc.moduli;
  const std::size_t k = d.size();
  const auto coords = all_coordinates(d, order);
  Tables t{std::vector<Index>(order * order), std::vector<Index>(order * order)};
  std::vector<Index> sum(k);
  std::vector<std::uint64_t> acc(k);
  for (std::size_t x = 0; x < order; ++x)
    for (std::size_t y = 0; y < order; ++y) {
      for (std::size_t i = 0; i < k; ++i) sum[i] = (coords[x][i] + coords[y][i]) % d[i];
      t.add[x * order + y] = encode(d, sum);

      std::fill(acc.begin(), acc.end(), 0);
      for (std::size_t i = 0; i < k; ++i) {
        if (coords[x][i] == 0) continue;
        for (std::size_t j = 0; j < k; ++j) {
          const std::uint64_t coef = std::uint64_t{coords[x][i]} * coords[y][j];
          if (coef == 0) continue;
          const auto& c = sc.products[i * k + j];
          for (std::size_t s = 0; s < k; ++s) acc[s] = (acc[s] + coef * c[s]) % d[s];
        }
      }
      for (std::size_t s = 0; s < k; ++s) sum[s] = static_cast<Index>(acc[s]);
      t.mul[x * order + y] = encode(d, sum);
    }
  return t;
}

void check_constants_shape(const StructureConstants& sc) {
  const std::size_t k = sc.moduli.size();
  if (k == 0) throw Error(ErrorKind::InvalidArgument, "at least one modulus is required");
  if (sc.products.size() != k * k)
    throw Error(ErrorKind::InvalidArgument, "expected k*k structure constants");
  for (std::size_t ij = 0; ij < k * k; ++ij) {
    const auto& c = sc.products[ij];
    if (c.size() != k)
      throw Error(ErrorKind::InvalidArgument, "structure constant has wrong length");
    for (std::size_t t = 0; t < k; ++t)
      if (c[t] >= sc.moduli[t])
        throw Error(ErrorKind::InvalidArgument,
                    tuple_text("coordinate out of range", ij / k + 1, ij % k + 1, t + 1));
  }
  // d_i * (e_i e_j) and d_j * (e_i e_j) must vanish for bilinearity to be well defined.
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      const auto& c = sc.products[i * k + j];
      for (std::size_t t = 0; t < k; ++t) {
        const std::uint64_t dt = sc.moduli[t];
        if ((std::uint64_t{sc.moduli[i]} * c[t]) % dt != 0 ||
            (std::uint64_t{sc.moduli[j]} * c[t]) % dt != 0)
          throw Error(ErrorKind::IllDefinedBilinearity,
                      tuple_text("d_i*(e_i e_j) or d_j*(e_i e_j) is nonzero", i + 1, j + 1));
      }
    }
}

}  // namespace

FiniteRing FiniteRing::build(std::size_t n, std::vector<Index> add, std::vector<Index> mul,
                             std::optional<StructureConstants> basis,
                             const BuildOptions& options) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "ring order must be >= 1");
  if (n > options.max_order)
    throw Error(ErrorKind::CapExceeded,
                "ring order " + std::to_string(n) + " exceeds cap " +
                    std::to_string(options.max_order));
  if (add.size() != n * n || mul.size() != n * n)
    throw Error(ErrorKind::InvalidArgument, "tables must be n x n");
  for (std::size_t i = 0; i < n * n; ++i)
    if (add[i] >= n || mul[i] >= n)
      throw Error(ErrorKind::InvalidArgument, tuple_text("table entry out of range", i / n, i % n));

  // Normalize: the additive identity becomes index 0.
  std::size_t zero = n;
  for (std::size_t e = 0; e < n && zero == n; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) ok = add[e * n + x] == x;
    if (ok) zero = e;
  }
  if (zero == n) throw Error(ErrorKind::NotAbelianGroup, "no additive identity");
  if (zero != 0) {
    basis.reset();
    std::vector<Index> relabel(n);
    std::iota(relabel.begin(), relabel.end(), 0);
    std::swap(relabel[0], relabel[zero]);
    std::vector<Index> a2(n * n), m2(n * n);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        a2[relabel[x] * n + relabel[y]] = relabel[add[x * n + y]];
        m2[relabel[x] * n + relabel[y]] = relabel[mul[x * n + y]];
      }
    add = std::move(a2);
    mul = std::move(m2);
  }

  validate_tables(n, add, mul);

  FiniteRing ring;
  ring.order_ = n;
  ring.id_ = next_ring_id();
  ring.add_ = std::move(add);
  ring.mul_ = std::move(mul);
  ring.neg_.assign(n, 0);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (ring.add_[x * n + y] == 0) {
        ring.neg_[x] = static_cast<Index>(y);
        break;
      }
  ring.basis_ = std::move(basis);
  return ring;
}

FiniteRing FiniteRing::from_tables(std::span<const std::vector<Index>> add,
                                   std::span<const std::vector<Index>> mul,
                                   const BuildOptions& options) {
  const std::size_t n = add.size();
  if (mul.size() != n) throw Error(ErrorKind::InvalidArgument, "tables differ in dimension");
  std::vector<Index> a, m;
  a.reserve(n * n);
  m.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (add[i].size() != n || mul[i].size() != n)
      throw Error(ErrorKind::InvalidArgument, "tables must be square");
    a.insert(a.end(), add[i].begin(), add[i].end());
    m.insert(m.end(), mul[i].begin(), mul[i].end());
  }
  return build(n, std::move(a), std::move(m), std::nullopt, options);
}

FiniteRing FiniteRing::from_flat_tables(std::size_t order, std::vector<Index> add,
                                        std::vector<Index> mul, const BuildOptions& options) {
  return build(order, std::move(add), std::move(mul), std::nullopt, options);
}

FiniteRing FiniteRing::from_structure_constants(const StructureConstants& sc,
                                                const BuildOptions& options) {
  check_constants_shape(sc);
  const std::size_t order = checked_order(sc.moduli, options);
  auto t = tables_from_constants(sc, order);
  return build(order, std::move(t.add), std::move(t.mul), sc, options);
}

void FiniteRing::check_ring(RingElement e) const {
  if (e.ring != id_) throw Error(ErrorKind::RingMismatch, "element belongs to another ring");
  if (e.index >= order_) throw Error(ErrorKind::InvalidArgument, "element index out of range");
}

RingElement FiniteRing::element(Index i) const {
  if (i >= order_)
    throw Error(ErrorKind::InvalidArgument, "element index " + std::to_string(i) + " out of range");
  return {i, id_};
}

Index FiniteRing::index_of(RingElement e) const {
  check_ring(e);
  return e.index;
}

RingElement FiniteRing::add(RingElement a, RingElement b) const {
  check_ring(a);
  check_ring(b);
  return {add(a.index, b.index), id_};
}

RingElement FiniteRing::neg(RingElement a) const {
  check_ring(a);
  return {neg(a.index), id_};
}

RingElement FiniteRing::mul(RingElement a, RingElement b) const {
  check_ring(a);
  check_ring(b);
  return {mul(a.index, b.index), id_};
}

RingElement FiniteRing::commutator(RingElement a, RingElement b) const {
  check_ring(a);
  check_ring(b);
  return {commutator(a.index, b.index), id_};
}

std::size_t FiniteRing::additive_order(Index a) const noexcept {
  std::size_t m = 1;
  for (Index x = a; x != 0; x = add(x, a)) ++m;
  return m;
}

bool FiniteRing::is_commutative() const noexcept {
  for (std::size_t a = 0; a < order_; ++a)
    for (std::size_t b = a + 1; b < order_; ++b)
      if (mul_[a * order_ + b] != mul_[b * order_ + a]) return false;
  return true;
}

std::vector<Index> FiniteRing::coordinates(Index a) const {
  if (!basis_) return {a};
  std::vector<Index> c(basis_->moduli.size());
  std::size_t rest = a;
  for (std::size_t t = c.size(); t-- > 0;) {
    c[t] = static_cast<Index>(rest % basis_->moduli[t]);
    rest /= basis_->moduli[t];
  }
  return c;
}

Index FiniteRing::from_coordinates(std::span<const Index> coords) const {
  if (!basis_) {
    if (coords.size() != 1 || coords[0] >= order_)
      throw Error(ErrorKind::InvalidArgument, "ring has no basis; expected a single index");
    return coords[0];
  }
  const auto& d = basis_->moduli;
  if (coords.size() != d.size())
    throw Error(ErrorKind::InvalidArgument, "expected " + std::to_string(d.size()) + " coordinates");
  std::size_t idx = 0;
  for (std::size_t t = 0; t < d.size(); ++t) {
    if (coords[t] >= d[t]) throw Error(ErrorKind::InvalidArgument, "coordinate out of range");
    idx = idx * d[t] + coords[t];
  }
  return static_cast<Index>(idx);
}

void FiniteRing::revalidate() const {
  validate_tables(order_, add_, mul_);
  if (basis_) {
    const auto t = tables_from_constants(*basis_, order_);
    if (t.add != add_ || t.mul != mul_)
      throw Error(ErrorKind::InvalidArgument, "tables disagree with structure constants");
  }
}

FiniteRing direct_product(const FiniteRing& r1, const FiniteRing& r2, const BuildOptions& options) {
  const std::size_t n1 = r1.order(), n2 = r2.order(), n = n1 * n2;
  if (n > options.max_order)
    throw Error(ErrorKind::CapExceeded, "product order " + std::to_string(n) + " exceeds cap");
  if (r1.basis() && r2.basis()) {
    const auto& b1 = *r1.basis();
    const auto& b2 = *r2.basis();
    const std::size_t k1 = b1.rank(), k2 = b2.rank(), k = k1 + k2;
    StructureConstants sc;
    sc.moduli = b1.moduli;
    sc.moduli.insert(sc.moduli.end(), b2.moduli.begin(), b2.moduli.end());
    sc.products.assign(k * k, std::vector<Index>(k, 0));
    for (std::size_t i = 0; i < k1; ++i)
      for (std::size_t j = 0; j < k1; ++j)
        std::copy(b1.products[i * k1 + j].begin(), b1.products[i * k1 + j].end(),
                  sc.products[i * k + j].begin());
    for (std::size_t i = 0; i < k2; ++i)
      for (std::size_t j = 0; j < k2; ++j)
        std::copy(b2.products[i * k2 + j].begin(), b2.products[i * k2 + j].end(),
                  sc.products[(k1 + i) * k + (k1 + j)].begin() + static_cast<std::ptrdiff_t>(k1));
    return FiniteRing::from_structure_constants(sc, options);
  }
  std::vector<Index> add(n * n), mul(n * n);
  for (std::size_t a1 = 0; a1 < n1; ++a1)
    for (std::size_t a2 = 0; a2 < n2; ++a2)
      for (std::size_t b1 = 0; b1 < n1; ++b1)
        for (std::size_t b2 = 0; b2 < n2; ++b2) {
          const std::size_t a = a1 * n2 + a2, b = b1 * n2 + b2;
          add[a * n + b] = static_cast<Index>(
              r1.add(static_cast<Index>(a1), static_cast<Index>(b1)) * n2 +
              r2.add(static_cast<Index>(a2), static_cast<Index>(b2)));
          mul[a * n + b] = static_cast<Index>(
              r1.mul(static_cast<Index>(a1), static_cast<Index>(b1)) * n2 +
              r2.mul(static_cast<Index>(a2), static_cast<Index>(b2)));
        }
  return FiniteRing::from_flat_tables(n, std::move(add), std::move(mul), options);
}

}  // namespace ringprob
