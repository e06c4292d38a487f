#include "ringprob/bounds.hpp"

#include <functional>
#include <sstream>

#include "ringprob/errors.hpp"

namespace ringprob {
namespace {

Rational Q(std::uint64_t a, std::uint64_t b = 1) { return Rational(BigInt(a), BigInt(b)); }

// p^e for any integer e.
Rational power(std::uint64_t p, int e) {
  BigInt v = 1;
  for (int i = 0; i < (e < 0 ? -e : e); ++i) v *= p;
  return e < 0 ? Rational(BigInt(1), v) : Rational(v);
}

bool is_prime(std::uint64_t n) { return n >= 2 && smallest_prime_divisor(n) == n; }

// e with n = p^e, or -1.
int prime_power_exponent(std::uint64_t n, std::uint64_t p) {
  if (n == 0 || p < 2) return -1;
  int e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  return n == 1 ? e : -1;
}

std::uint64_t exponent_of(const IsoType& t) { return t.empty() ? 1 : t.back(); }

const char* kNoPrime = "ring of order 1 has no prime divisor";

CheckRecord check_or_skip(bool applicable, std::string name, std::string reason,
                          const std::function<CheckRecord()>& build) {
  if (!applicable) return CheckRecord::skipped(std::move(name), std::move(reason));
  auto rec = build();
  rec.name = std::move(name);
  return rec;
}

std::string element_text(const FiniteRing& ring, Index x) {
  std::ostringstream os;
  os << x;
  if (ring.basis()) {
    os << "(";
    const auto c = ring.coordinates(x);
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
    os << ")";
  }
  return os.str();
}

}  // namespace

std::string_view to_string(Relation r) noexcept {
  switch (r) {
    case Relation::Le: return "<=";
    case Relation::Ge: return ">=";
    case Relation::Eq: return "=";
    case Relation::Lt: return "<";
    case Relation::Gt: return ">";
  }
  return "?";
}

std::string_view to_string(EqualityMode m) noexcept {
  switch (m) {
    case EqualityMode::None: return "none";
    case EqualityMode::Iff: return "iff";
    case EqualityMode::If: return "if";
  }
  return "?";
}

bool evaluate(Relation r, const Rational& lhs, const Rational& rhs) {
  switch (r) {
    case Relation::Le: return lhs <= rhs;
    case Relation::Ge: return lhs >= rhs;
    case Relation::Eq: return lhs == rhs;
    case Relation::Lt: return lhs < rhs;
    case Relation::Gt: return lhs > rhs;
  }
  return false;
}

bool CheckRecord::equality_consistent() const {
  if (!applicable || equality_mode == EqualityMode::None || !equality_condition_met) return true;
  const bool attained = equality_attained();
  if (equality_mode == EqualityMode::Iff) return attained == *equality_condition_met;
  return !*equality_condition_met || attained;
}

CheckRecord CheckRecord::make(std::string name, Rational lhs, Relation rel, Rational rhs) {
  CheckRecord c;
  c.name = std::move(name);
  c.applicable = true;
  c.holds = evaluate(rel, lhs, rhs);
  c.lhs = std::move(lhs);
  c.rhs = std::move(rhs);
  c.relation = rel;
  return c;
}

CheckRecord CheckRecord::skipped(std::string name, std::string reason) {
  CheckRecord c;
  c.name = std::move(name);
  c.reason = std::move(reason);
  return c;
}

CheckRecord& CheckRecord::with_equality(EqualityMode mode, bool condition_met) {
  equality_mode = mode;
  equality_condition_met = condition_met;
  return *this;
}

CheckRecord& CheckRecord::with_witness(std::string w) {
  witness = std::move(w);
  return *this;
}

bool BoundReport::all_passed() const {
  for (const auto& c : checks)
    if (!c.passed()) return false;
  return true;
}

std::uint64_t smallest_prime_divisor(std::uint64_t n) {
  if (n < 2) return 0;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return p;
  return n;
}

std::string members_text(std::span<const Index> members) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < members.size(); ++i) os << (i ? "," : "") << members[i];
  os << "}";
  return os.str();
}

ElementSet x_set(const Subring& s, const Subring& k) {
  require_same_ring(s.ring_id(), k.ring_id());
  CentralizerCache cache(k);
  ElementSet out(s.ring().order());
  for (Index a : s.members())
    if (cache.centralizer_size(a) == 1) out.insert(a);
  return out;
}

BoundsEngine::BoundsEngine(RingPtr ring)
    : ring_(std::move(ring)), p_(smallest_prime_divisor(ring_->order())), whole_(Subring::whole(ring_)) {}

CentralizerCache& BoundsEngine::cache(const Subring& k) {
  require_same_ring(ring_->id(), k.ring_id());
  auto& slot = caches_[k.bits()];
  if (!slot) slot = std::make_unique<CentralizerCache>(k);
  return *slot;
}

const PairSummary& BoundsEngine::pair(const Subring& s, const Subring& k) {
  require_same_ring(s.ring_id(), k.ring_id());
  auto& slot = pairs_[{s.bits(), k.bits()}];
  if (slot) return *slot;
  auto& kc = cache(k);
  auto& sc = cache(s);
  ElementSet xs(ring_->order()), xk(ring_->order());
  for (Index a : s.members())
    if (kc.centralizer_size(a) == 1) xs.insert(a);
  for (Index b : k.members())
    if (sc.centralizer_size(b) == 1) xk.insert(b);
  slot = std::make_unique<PairSummary>(PairSummary{
      s, k, relative_center(s, k), relative_center(k, s), commutator_subgroup(s, k),
      pr_distribution(s, k), ringprob::pr(s, kc), std::move(xs), std::move(xk),
      s.is_subset_of(k), k.is_subset_of(s)});
  return *slot;
}

const QuotientRing& BoundsEngine::quotient(const Subring& ideal) {
  auto& slot = quotients_[ideal.bits()];
  if (!slot) slot = std::make_unique<QuotientRing>(quotient_ring(ideal));
  return *slot;
}

BoundReport BoundsEngine::check_all(const Subring& s, const Subring& k, RingElement r) {
  const auto& R = *ring_;
  const Index ri = R.index_of(r);
  const auto& P = pair(s, k);
  const auto& PK = pair(k, s);
  auto& kc = cache(k);
  auto& sc = cache(s);
  const std::uint64_t p = p_;
  const std::uint64_t ns = s.size(), nk = k.size();
  const std::uint64_t z1 = P.z_sk.size(), z2 = P.z_ks.size();
  const Rational pr_st = P.pr.value();
  const Rational prr = P.distribution.at(ri).value();
  const bool in_support = P.distribution.support.contains(ri);
  const bool commuting = P.commutators.size() == 1;

  BoundReport rep;
  rep.s_members.assign(s.members().begin(), s.members().end());
  rep.k_members.assign(k.members().begin(), k.members().end());
  rep.r = ri;
  rep.smallest_prime = p;
  auto& out = rep.checks;

  // Exact identities.
  out.push_back(CheckRecord::make("pr_r.count_matches_formula", prr, Relation::Eq,
                                  pr_r_formula(s, kc, ri).value()));
  {
    Rational route = 0;
    for (Index a : s.members())
      if (kc.image(a).contains(ri)) route += Q(1, kc.image_size(a));
    out.push_back(CheckRecord::make("pr_r.image_size_route", prr, Relation::Eq, route / ns));
  }
  out.push_back(CheckRecord::make("pr_r.swap_negates_target", prr, Relation::Eq,
                                  PK.distribution.at(R.neg(ri)).value()));
  out.push_back(check_or_skip(R.add(ri, ri) == 0, "pr_r.swap_when_2r_zero", "2r != 0", [&] {
    return CheckRecord::make("", prr, Relation::Eq, PK.distribution.at(ri).value());
  }));
  out.push_back(CheckRecord::make("pr_r.one_iff_trivial", prr, Relation::Le, Q(1))
                    .with_equality(EqualityMode::Iff, ri == 0 && commuting));
  out.push_back(CheckRecord::make("pr_r.zero_iff_outside_support", prr, Relation::Ge, Q(0))
                    .with_equality(EqualityMode::Iff, !in_support));
  out.push_back(CheckRecord::make("pr.symmetric", pr_st, Relation::Eq, PK.pr.value()));
  out.push_back(CheckRecord::make("pr.image_size_route", pr_st, Relation::Eq,
                                  pr_from_image_sizes(s, kc)));

  // Lower bounds for a realized nonzero target.
  const bool target_ok = ri != 0 && in_support;
  const std::string target_reason = ri == 0 ? "r = 0" : "r is not a commutator [s,k]";
  out.push_back(check_or_skip(target_ok, "pr_r.lower.center_product", target_reason, [&] {
    return CheckRecord::make("", prr, Relation::Ge, Q(z1 * z2, ns * nk));
  }));
  out.push_back(check_or_skip(target_ok && P.s_in_k, "pr_r.lower.center_product_doubled",
                              target_ok ? "S is not contained in K" : target_reason, [&] {
                                return CheckRecord::make("", prr, Relation::Ge,
                                                         Q(2 * z1 * z2, ns * nk));
                              }));
  {
    // Same bound, restricted to targets hit by some s outside Z(K,S).
    std::optional<Index> witness;
    if (target_ok && P.s_in_k)
      for (Index a : s.members())
        if (!P.z_ks.contains(a) && kc.image(a).contains(ri)) {
          witness = a;
          break;
        }
    out.push_back(check_or_skip(
        witness.has_value(), "pr_r.lower.center_product_doubled.noncentral_witness",
        !target_ok ? target_reason
                   : (!P.s_in_k ? "S is not contained in K" : "every s with r in [s,K] lies in Z(K,S)"),
        [&] {
          return CheckRecord::make("", prr, Relation::Ge, Q(2 * z1 * z2, ns * nk))
              .with_witness("s = " + element_text(R, *witness));
        }));
  }
  {
    const bool full = s.is_whole() && k.is_whole();
    out.push_back(check_or_skip(target_ok && full, "pr_r.lower.full_ring_three_cosets",
                                target_ok ? "S and K are not both R" : target_reason, [&] {
                                  const std::uint64_t idx = R.order() / z1;
                                  return CheckRecord::make("", prr, Relation::Ge, Q(3, idx * idx));
                                }));
  }

  // Upper bounds.
  out.push_back(CheckRecord::make("pr_r.le_pr", prr, Relation::Le, pr_st)
                    .with_equality(EqualityMode::Iff, ri == 0));
  out.push_back(check_or_skip(P.s_in_k, "pr.le_index_times_pr_k", "S is not contained in K", [&] {
    const auto& KK = pair(k, k);
    return CheckRecord::make("", pr_st, Relation::Le, Q(nk, ns) * KK.pr.value())
        .with_equality(EqualityMode::Iff, s == k);
  }));
  const bool have_p = p != 0;
  out.push_back(check_or_skip(have_p && ri != 0, "pr_r.upper.smallest_prime",
                              have_p ? "r = 0" : kNoPrime, [&] {
                                return CheckRecord::make("", prr, Relation::Le, Q(ns - z1, p * ns));
                              }));
  out.push_back(check_or_skip(have_p && ri != 0, "pr_r.upper.below_inverse_prime",
                              have_p ? "r = 0" : kNoPrime,
                              [&] { return CheckRecord::make("", prr, Relation::Lt, Q(1, p)); }));

  const std::uint64_t s_index = ns / z1;
  const int n_exp = have_p ? prime_power_exponent(s_index, p) : -1;
  out.push_back(check_or_skip(have_p && P.s_in_k && n_exp >= 0, "pr.upper.prime_power_index",
                              !have_p ? kNoPrime
                                      : (!P.s_in_k ? "S is not contained in K"
                                                   : "|S:Z(S,K)| is not a power of p"),
                              [&] {
                                const Rational pn = power(p, n_exp);
                                return CheckRecord::make("", pr_st, Relation::Le,
                                                         (pn + p - 1) / power(p, n_exp + 1));
                              }));
  out.push_back(check_or_skip(have_p && s == k && n_exp >= 0, "pr.lower.prime_power_index_equal_pair",
                              !have_p ? kNoPrime
                                      : (s != k ? "S != K" : "|S:Z(S,K)| is not a power of p"),
                              [&] {
                                const Rational rhs = (power(p, n_exp) + power(p, n_exp - 1) - 1) /
                                                     power(p, 2 * n_exp - 1);
                                return CheckRecord::make("", pr_st, Relation::Ge, rhs);
                              }));

  // Centralizer-size bounds through X_S, in both orientations.
  auto x_bounds = [&](const char* suffix, std::uint64_t a, std::uint64_t b, std::uint64_t za,
                      std::uint64_t xa) {
    const std::string lo = std::string("pr.lower.x_set") + suffix;
    const std::string hi = std::string("pr.upper.x_set") + suffix;
    out.push_back(check_or_skip(have_p, lo, kNoPrime, [&] {
      const Rational rhs = Q(za, a) + (Rational(p) * (Rational(a) - xa - za) + xa) / (a * b);
      return CheckRecord::make("", pr_st, Relation::Ge, rhs);
    }));
    out.push_back(check_or_skip(have_p, hi, kNoPrime, [&] {
      const Rational rhs = Rational((p - 1) * za + a) / (p * a) -
                           Rational(xa) * (Rational(b) - p) / (p * a * b);
      return CheckRecord::make("", pr_st, Relation::Le, rhs);
    }));
  };
  x_bounds("", ns, nk, z1, P.x_s.count());
  x_bounds(".swapped", nk, ns, z2, P.x_k.count());

  out.push_back(check_or_skip(have_p && !commuting, "pr.upper.noncommuting_pair",
                              have_p ? "[S,K] = {0}" : kNoPrime, [&] {
                                return CheckRecord::make("", pr_st, Relation::Le, Q(2 * p - 1, p * p));
                              }));
  out.push_back(check_or_skip(!commuting, "pr.upper.three_quarters", "[S,K] = {0}",
                              [&] { return CheckRecord::make("", pr_st, Relation::Le, Q(3, 4)); }));

  const std::uint64_t c = P.commutators.size();
  out.push_back(CheckRecord::make("pr.lower.commutator_subgroup", pr_st, Relation::Ge,
                                  Q(1, c) * (Q(1) + Q(c - 1, s_index))));
  out.push_back(check_or_skip(z1 != ns, "pr.lower.commutator_subgroup_strict", "Z(S,K) = S",
                              [&] { return CheckRecord::make("", pr_st, Relation::Gt, Q(1, c)); }));

  // Image containment hypotheses.
  bool images_on_s = true, images_on_k = true;
  for (Index x : s.members()) images_on_s = images_on_s && sc.image(x).is_subset_of(kc.image(x));
  for (Index x : k.members()) images_on_k = images_on_k && sc.image(x).is_subset_of(kc.image(x));
  const char* no_images = "[x,S] is not contained in [x,K] for some x in S or K";
  out.push_back(check_or_skip(images_on_s && images_on_k, "pr.sandwich.lower", no_images, [&] {
    return CheckRecord::make("", pair(k, k).pr.value(), Relation::Le, pr_st);
  }));
  out.push_back(check_or_skip(images_on_s && images_on_k, "pr.sandwich.upper", no_images, [&] {
    return CheckRecord::make("", pr_st, Relation::Le, pair(s, s).pr.value());
  }));
  {
    const bool noncomm = !s.is_commutative();
    const std::uint64_t q = smallest_prime_divisor(ns);
    out.push_back(check_or_skip(images_on_s && noncomm, "pr.upper.noncommutative_subring",
                                !images_on_s ? "[x,S] is not contained in [x,K] for some x in S"
                                             : "S is commutative",
                                [&] {
                                  auto rec = CheckRecord::make(
                                      "", pr_st, Relation::Le, Q(q * q + q - 1, q * q * q));
                                  if (q != p)
                                    rec.with_witness("least prime of |S| is " + std::to_string(q) +
                                                     ", of |R| is " + std::to_string(p));
                                  return rec;
                                }));
  }
  return rep;
}

std::vector<CheckRecord> BoundsEngine::check_nested(const Subring& s1, const Subring& s2,
                                                    const Subring& k1, const Subring& k2,
                                                    RingElement r) {
  if (!s1.is_subset_of(s2) || !k1.is_subset_of(k2))
    throw Error(ErrorKind::NotNested, "expected S1 in S2 and K1 in K2");
  const Index ri = ring_->index_of(r);
  auto& k1c = cache(k1);
  auto& k2c = cache(k2);
  auto& s1c = cache(s1);
  const Rational lhs = pr_r_formula(s1, k1c, ri).value();
  const Rational pr22 = pr_r_formula(s2, k2c, ri).value();
  const std::uint64_t is = s2.size() / s1.size(), ik = k2.size() / k1.size();
  std::vector<CheckRecord> out;

  bool cond = true;
  for (Index a : s2.members()) {
    if (s1.contains(a)) {
      const bool in1 = k1c.image(a).contains(ri), in2 = k2c.image(a).contains(ri);
      if (in2 && !in1) cond = false;
      if (in1 && !(k1c.centralizer(a) == k2c.centralizer(a))) cond = false;
    } else if (k2c.image(a).contains(ri)) {
      cond = false;
    }
  }
  out.push_back(CheckRecord::make("nested.pr_r_index_bound", lhs, Relation::Le, Q(is * ik) * pr22)
                    .with_equality(EqualityMode::Iff, cond));
  out.push_back(check_or_skip(ri == 0, "nested.pr_r_index_bound.zero_target", "r != 0", [&] {
    return CheckRecord::make("", lhs, Relation::Le, Q(is * ik) * pr22)
        .with_equality(EqualityMode::Iff, s1 == s2 && k1 == k2);
  }));
  out.push_back(check_or_skip(k1.is_whole() && k2.is_whole(), "nested.pr_r_against_whole_ring",
                              "K1 and K2 are not both R", [&] {
                                return CheckRecord::make("", lhs, Relation::Le,
                                                         Q(is) * pair(s2, k2).pr.value())
                                    .with_equality(EqualityMode::Iff, ri == 0 && s1 == s2);
                              }));

  const Rational pr_k1 = pair(s1, k1).pr.value();
  const Rational pr_k2 = pair(s1, k2).pr.value();
  bool same_images = true;
  for (Index a : s1.members()) same_images = same_images && k1c.image(a) == k2c.image(a);
  out.push_back(CheckRecord::make("nested.pr_monotone_in_k", pr_k1, Relation::Ge, pr_k2)
                    .with_equality(EqualityMode::Iff, same_images));
  bool trivial_centralizers = true;
  for (Index b : k2.members())
    if (!k1.contains(b)) trivial_centralizers = trivial_centralizers && s1c.centralizer_size(b) == 1;
  const Rational refined =
      Q(1, ik) * (pr_k1 + Q(k2.size() - k1.size(), std::uint64_t{s1.size()} * k1.size()));
  out.push_back(CheckRecord::make("nested.pr_refined_lower_in_k", pr_k2, Relation::Ge, refined)
                    .with_equality(EqualityMode::Iff, trivial_centralizers));
  return out;
}

QuotientCharacterization BoundsEngine::characterize_quotients(const Subring& s, const Subring& k) {
  const auto& P = pair(s, k);
  const std::uint64_t p = p_;
  const std::uint64_t order = ring_->order();
  const std::uint64_t ns = s.size(), nk = k.size();
  const Rational pr_st = P.pr.value();
  const auto qs = quotient_group(s, P.z_sk);
  const auto qk = quotient_group(k, P.z_ks);

  QuotientCharacterization out;
  out.s_quotient = qs.iso_type;
  out.k_quotient = qk.iso_type;
  out.s_equals_k = s == k;
  auto& recs = out.checks;
  const std::uint64_t s_index = qs.size(), k_index = qk.size();
  const std::string observed =
      "S/Z(S,K) " + iso_type_text(qs.iso_type) + ", K/Z(K,S) " + iso_type_text(qk.iso_type);

  // Primes q whose characteristic value Pr could equal; q^2 must divide |S||K|.
  auto find_prime = [&](const std::function<Rational(std::uint64_t)>& value) -> std::uint64_t {
    for (std::uint64_t q = 2; q * q <= ns * nk; ++q)
      if (is_prime(q) && value(q) == pr_st) return q;
    return 0;
  };

  const auto q1 = find_prime([](std::uint64_t q) { return Q(2 * q - 1, q * q); });
  const char* no_q1 = "Pr(S,K) is not (2q-1)/q^2 for a prime q";
  recs.push_back(check_or_skip(q1 != 0, "characterize.cyclic_pair.prime_divides_order", no_q1, [&] {
    return CheckRecord::make("", Q(order % q1), Relation::Eq, Q(0))
        .with_witness("q = " + std::to_string(q1));
  }));
  const bool q1_least = q1 != 0 && q1 == p;
  const char* not_least = "q is not the least prime dividing |R|";
  recs.push_back(check_or_skip(q1_least, "characterize.cyclic_pair.s_quotient_order",
                               q1 ? not_least : no_q1, [&] {
                                 return CheckRecord::make("", Q(s_index), Relation::Eq, Q(p))
                                     .with_witness(observed);
                               }));
  recs.push_back(check_or_skip(q1_least, "characterize.cyclic_pair.k_quotient_order",
                               q1 ? not_least : no_q1, [&] {
                                 return CheckRecord::make("", Q(k_index), Relation::Eq, Q(p))
                                     .with_witness(observed);
                               }));
  recs.push_back(check_or_skip(q1_least, "characterize.cyclic_pair.distinct",
                               q1 ? not_least : no_q1, [&] {
                                 return CheckRecord::make("", Q(s == k ? 0 : 1), Relation::Eq, Q(1));
                               }));

  const bool both_noncomm = P.s_in_k && !s.is_commutative() && !k.is_commutative();
  const auto q2 = both_noncomm ? find_prime([](std::uint64_t q) {
    return Q(q * q + q - 1, q * q * q);
  })
                               : 0;
  const char* no_q2 = !both_noncomm ? "needs S in K with S and K non-commutative"
                                    : "Pr(S,K) is not (q^2+q-1)/q^3 for a prime q";
  recs.push_back(check_or_skip(q2 != 0, "characterize.elementary_pair.prime_divides_order", no_q2, [&] {
    return CheckRecord::make("", Q(order % q2), Relation::Eq, Q(0))
        .with_witness("q = " + std::to_string(q2));
  }));
  const bool q2_least = q2 != 0 && q2 == p;
  recs.push_back(check_or_skip(q2_least, "characterize.elementary_pair.s_quotient_order",
                               q2 ? not_least : no_q2, [&] {
                                 return CheckRecord::make("", Q(s_index), Relation::Eq, Q(p * p))
                                     .with_witness(observed);
                               }));
  recs.push_back(check_or_skip(q2_least, "characterize.elementary_pair.s_quotient_exponent",
                               q2 ? not_least : no_q2, [&] {
                                 return CheckRecord::make("", Q(exponent_of(qs.iso_type)),
                                                          Relation::Eq, Q(p))
                                     .with_witness(observed);
                               }));

  recs.push_back(check_or_skip(P.s_in_k && !s.is_commutative(), "structure.quotient_not_cyclic",
                               "needs S in K with S non-commutative", [&] {
                                 return CheckRecord::make("", Q(qs.iso_type.size()), Relation::Ge, Q(2))
                                     .with_witness(observed);
                               }));

  // Partial converses.
  const bool cyclic_prime = P.s_in_k && is_prime(s_index);
  const std::uint64_t n = nk / ns;
  const char* no_cyclic = "needs S in K with S/Z(S,K) of prime order";
  recs.push_back(check_or_skip(cyclic_prime, "converse.cyclic_quotient.lower", no_cyclic, [&] {
    const std::uint64_t q = s_index;
    return CheckRecord::make("", pr_st, Relation::Ge, Q(n + q - 1, n * q));
  }));
  recs.push_back(check_or_skip(cyclic_prime && s_index == p && n == p, "converse.cyclic_quotient.exact",
                               cyclic_prime ? "|S:Z(S,K)| or |K:S| differs from the least prime of |R|"
                                            : no_cyclic,
                               [&] { return CheckRecord::make("", pr_st, Relation::Eq, Q(2 * p - 1, p * p)); }));

  const bool elementary = qs.iso_type.size() == 2 && qs.iso_type[0] == qs.iso_type[1] &&
                          is_prime(qs.iso_type[0]);
  const std::uint64_t eq = elementary ? qs.iso_type[0] : 0;
  const char* no_elem = "needs S in K with S/Z(S,K) elementary abelian of rank 2";
  recs.push_back(check_or_skip(P.s_in_k && elementary, "converse.elementary_quotient.lower", no_elem, [&] {
    return CheckRecord::make("", pr_st, Relation::Ge,
                             Q((n + 2) * eq * eq - 2, n * eq * eq * eq * eq));
  }));
  recs.push_back(check_or_skip(P.s_in_k && elementary && eq == p && n == 1,
                               "converse.elementary_quotient.exact",
                               P.s_in_k && elementary ? "q is not the least prime of |R| or S != K" : no_elem,
                               [&] {
                                 return CheckRecord::make("", pr_st, Relation::Eq,
                                                          Q(p * p + p - 1, p * p * p));
                               }));
  recs.push_back(check_or_skip(P.s_in_k && qs.iso_type == IsoType{2} && n == 2, "converse.three_quarters",
                               "needs S in K, S/Z(S,K) of order 2, |K:S| = 2",
                               [&] { return CheckRecord::make("", pr_st, Relation::Eq, Q(3, 4)); }));
  recs.push_back(check_or_skip(P.s_in_k && qs.iso_type == (IsoType{2, 2}) && n == 1,
                               "converse.five_eighths", "needs S = K with S/Z(S,K) of type [2,2]",
                               [&] { return CheckRecord::make("", pr_st, Relation::Eq, Q(5, 8)); }));

  {
    bool uniform = p != 0 && qs.iso_type == (IsoType{p, p});
    auto& kc = cache(k);
    if (uniform)
      for (Index a : s.members())
        if (!P.z_sk.contains(a) && kc.image_size(a) != p) uniform = false;
    recs.push_back(check_or_skip(uniform, "pr.exact.uniform_commutator_images",
                                 "needs S/Z(S,K) of type [p,p] and |[s,K]| = p off Z(S,K)", [&] {
                                   return CheckRecord::make("", pr_st, Relation::Eq,
                                                            Q(p * p + p - 1, p * p * p));
                                 }));
  }
  return out;
}

CheckRecord BoundsEngine::check_factor_inequality(const Subring& s, const Subring& k,
                                                  const Subring& ideal) {
  require_same_ring(s.ring_id(), ideal.ring_id());
  require_same_ring(k.ring_id(), ideal.ring_id());
  if (!is_ideal(ideal)) throw Error(ErrorKind::NotAnIdeal, "I is not a two-sided ideal");
  if (!ideal.is_subset_of(s) || !ideal.is_subset_of(k))
    throw Error(ErrorKind::NotContained, "I is not contained in S and K");
  const auto& q = quotient(ideal);
  const auto sq = q.image(s), kq = q.image(k);
  const Rational rhs = ringprob::pr(sq, kq).value() * pair(ideal, ideal).pr.value();
  const auto sr = commutator_subgroup(s, whole_);
  const bool meets_trivially = (sr.members & ideal.bits()).count() == 1;
  return CheckRecord::make("factor.pr_le_quotient_times_ideal", pair(s, k).pr.value(), Relation::Le, rhs)
      .with_equality(EqualityMode::If, meets_trivially);
}

std::vector<CheckRecord> BoundsEngine::check_centralizer_quotient(const Subring& h, const Subring& n,
                                                                  RingElement x) {
  require_same_ring(h.ring_id(), n.ring_id());
  const Index xi = ring_->index_of(x);
  if (!is_ideal(n)) throw Error(ErrorKind::NotAnIdeal, "N is not a two-sided ideal");
  if (!n.is_subset_of(h)) throw Error(ErrorKind::NotContained, "N is not contained in H");
  const auto& q = quotient(n);
  const auto& qr = *q.ring;
  const Index xq = q.project(xi);

  ElementSet image(qr.order()), target(qr.order());
  cache(h).centralizer(xi).for_each([&](Index c) { image.insert(q.project(c)); });
  for (Index y : h.members()) {
    const Index yq = q.project(y);
    if (qr.commutator(yq, xq) == 0) target.insert(yq);
  }
  const auto hr = commutator_subgroup(h, whole_);
  const bool meets_trivially = (hr.members & n.bits()).count() == 1;
  std::vector<CheckRecord> out;
  out.push_back(CheckRecord::make("centralizer_quotient.inclusion", Q((image & target).count()),
                                  Relation::Eq, Q(image.count())));
  out.push_back(CheckRecord::make("centralizer_quotient.equality", Q(image.count()), Relation::Le,
                                  Q(target.count()))
                    .with_equality(EqualityMode::If, meets_trivially));
  return out;
}

std::vector<CheckRecord> BoundsEngine::check_structure(const Subring& s, const Subring& k) {
  const auto& R = *ring_;
  auto& kc = cache(k);
  std::vector<CheckRecord> out;

  std::uint64_t ok = 0;
  std::string first_bad;
  for (Index x = 0; x < R.order(); ++x) {
    if (kc.image_size(x) * kc.centralizer_size(x) == k.size())
      ++ok;
    else if (first_bad.empty())
      first_bad = "x = " + element_text(R, x);
  }
  out.push_back(CheckRecord::make("structure.image_times_centralizer", Q(ok), Relation::Eq, Q(R.order()))
                    .with_witness(first_bad));

  ok = 0;
  first_bad.clear();
  std::vector<std::vector<Index>> buckets(R.order());
  for (Index a : s.members()) {
    for (auto& b : buckets) b.clear();
    for (Index b : k.members()) buckets[R.commutator(a, b)].push_back(b);
    const auto& cent = kc.centralizer(a);
    const auto csize = cent.count();
    for (Index r = 0; r < R.order(); ++r) {
      const auto& t = buckets[r];
      bool good = t.empty() != kc.image(a).contains(r);
      if (good && !t.empty()) {
        good = t.size() == csize;
        cent.for_each([&](Index c) {
          if (good && R.commutator(a, R.add(t.front(), c)) != r) good = false;
        });
      }
      if (good)
        ++ok;
      else if (first_bad.empty())
        first_bad = "s = " + element_text(R, a) + ", r = " + element_text(R, r);
    }
  }
  out.push_back(CheckRecord::make("structure.solution_sets_are_cosets", Q(ok), Relation::Eq,
                                  Q(std::uint64_t{s.size()} * R.order()))
                    .with_witness(first_bad));

  ok = 0;
  first_bad.clear();
  for (Index a : s.members()) {
    const auto& img = kc.image(a);
    bool closed = true;
    img.for_each([&](Index u) {
      img.for_each([&](Index v) { closed = closed && img.contains(R.add(u, v)); });
    });
    if (closed)
      ++ok;
    else if (first_bad.empty())
      first_bad = "s = " + element_text(R, a);
  }
  out.push_back(CheckRecord::make("structure.commutator_image_is_subgroup", Q(ok), Relation::Eq,
                                  Q(s.size()))
                    .with_witness(first_bad));
  return out;
}

BoundReport check_all(const Subring& s, const Subring& k, RingElement r) {
  BoundsEngine engine(s.ring_ptr());
  return engine.check_all(s, k, r);
}

std::vector<CheckRecord> check_nested(const Subring& s1, const Subring& s2, const Subring& k1,
                                      const Subring& k2, RingElement r) {
  require_same_ring(s1.ring_id(), s2.ring_id());
  require_same_ring(s1.ring_id(), k1.ring_id());
  require_same_ring(s1.ring_id(), k2.ring_id());
  BoundsEngine engine(s1.ring_ptr());
  return engine.check_nested(s1, s2, k1, k2, r);
}

QuotientCharacterization characterize_quotients(const Subring& s, const Subring& k) {
  BoundsEngine engine(s.ring_ptr());
  return engine.characterize_quotients(s, k);
}

CheckRecord check_factor_inequality(const Subring& s, const Subring& k, const Subring& ideal) {
  BoundsEngine engine(s.ring_ptr());
  return engine.check_factor_inequality(s, k, ideal);
}

std::vector<CheckRecord> check_centralizer_quotient(const Subring& h, const Subring& n,
                                                    RingElement x) {
  BoundsEngine engine(h.ring_ptr());
  return engine.check_centralizer_quotient(h, n, x);
}

}  // namespace ringprob
