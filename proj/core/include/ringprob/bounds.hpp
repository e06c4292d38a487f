#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ringprob/probability.hpp"
#include "ringprob/subring.hpp"

namespace ringprob {

enum class Relation { Le, Ge, Eq, Lt, Gt };
std::string_view to_string(Relation r) noexcept;
bool evaluate(Relation r, const Rational& lhs, const Rational& rhs);

// How a record's equality claim is to be read: Iff checks both directions,
// If only that the condition forces equality.
enum class EqualityMode { None, Iff, If };
std::string_view to_string(EqualityMode m) noexcept;

struct CheckRecord {
  std::string name;
  bool applicable = false;
  std::string reason;  // failed hypothesis when not applicable
  std::optional<Rational> lhs;
  std::optional<Rational> rhs;
  Relation relation = Relation::Le;
  bool holds = false;  // relation(lhs, rhs); false when not applicable
  EqualityMode equality_mode = EqualityMode::None;
  std::optional<bool> equality_condition_met;
  std::string witness;

  bool equality_attained() const { return lhs && rhs && *lhs == *rhs; }
  // Consistency of the stated equality condition with what was observed.
  bool equality_consistent() const;
  // Not applicable, or the relation and any equality claim hold.
  bool passed() const { return !applicable || (holds && equality_consistent()); }

  static CheckRecord make(std::string name, Rational lhs, Relation rel, Rational rhs);
  static CheckRecord skipped(std::string name, std::string reason);
  CheckRecord& with_equality(EqualityMode mode, bool condition_met);
  CheckRecord& with_witness(std::string w);
};

struct BoundReport {
  std::vector<Index> s_members;
  std::vector<Index> k_members;
  std::optional<Index> r;
  std::uint64_t smallest_prime = 0;  // least prime dividing |R|; 0 for the zero ring
  std::vector<CheckRecord> checks;

  bool all_passed() const;
};

struct QuotientCharacterization {
  IsoType s_quotient;  // S / Z(S,K)
  IsoType k_quotient;  // K / Z(K,S)
  bool s_equals_k = false;
  std::vector<CheckRecord> checks;
};

// Everything about one (S, K) pair that does not depend on r.
struct PairSummary {
  Subring s;
  Subring k;
  Subring z_sk;  // Z(S,K)
  Subring z_ks;  // Z(K,S)
  AdditiveSubgroup commutators;  // [S,K]
  PrDistribution distribution;   // pair tally
  ProbValue pr;                  // Pr(S,K) by the centralizer sum
  ElementSet x_s;                // {s in S : C_K(s) = {0}}
  ElementSet x_k;                // {k in K : C_S(k) = {0}}
  bool s_in_k = false;
  bool k_in_s = false;
};

std::uint64_t smallest_prime_divisor(std::uint64_t n);
std::string members_text(std::span<const Index> members);

// Per-ring evaluator for every bound and characterization check. Holds
// centralizer, pair and quotient caches; not thread-safe.
class BoundsEngine {
 public:
  explicit BoundsEngine(RingPtr ring);

  const FiniteRing& ring() const noexcept { return *ring_; }
  std::uint64_t smallest_prime() const noexcept { return p_; }

  CentralizerCache& cache(const Subring& k);
  const PairSummary& pair(const Subring& s, const Subring& k);
  const QuotientRing& quotient(const Subring& ideal);

  BoundReport check_all(const Subring& s, const Subring& k, RingElement r);
  std::vector<CheckRecord> check_nested(const Subring& s1, const Subring& s2, const Subring& k1,
                                        const Subring& k2, RingElement r);
  QuotientCharacterization characterize_quotients(const Subring& s, const Subring& k);
  CheckRecord check_factor_inequality(const Subring& s, const Subring& k, const Subring& ideal);
  std::vector<CheckRecord> check_centralizer_quotient(const Subring& h, const Subring& n,
                                                      RingElement x);
  // Commutator-image sizes, solution-set cosets, image-is-subgroup.
  std::vector<CheckRecord> check_structure(const Subring& s, const Subring& k);

 private:
  RingPtr ring_;
  std::uint64_t p_;
  Subring whole_;
  std::map<ElementSet, std::unique_ptr<CentralizerCache>> caches_;
  std::map<std::pair<ElementSet, ElementSet>, std::unique_ptr<PairSummary>> pairs_;
  std::map<ElementSet, std::unique_ptr<QuotientRing>> quotients_;
};

// {s in S : C_K(s) = {0}}
ElementSet x_set(const Subring& s, const Subring& k);

BoundReport check_all(const Subring& s, const Subring& k, RingElement r);
std::vector<CheckRecord> check_nested(const Subring& s1, const Subring& s2, const Subring& k1,
                                      const Subring& k2, RingElement r);
QuotientCharacterization characterize_quotients(const Subring& s, const Subring& k);
CheckRecord check_factor_inequality(const Subring& s, const Subring& k, const Subring& ideal);
std::vector<CheckRecord> check_centralizer_quotient(const Subring& h, const Subring& n,
                                                    RingElement x);

}  // namespace ringprob
