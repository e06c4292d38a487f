#include "fixtures.hpp"
#include "ringprob/bounds.hpp"

using namespace fx;

namespace {

const CheckRecord& find(const std::vector<CheckRecord>& records, std::string_view name) {
  for (const auto& r : records)
    if (r.name == name) return r;
  throw std::runtime_error("no record " + std::string(name));
}

}  // namespace

class Nc4aBounds : public ::testing::Test {
 protected:
  RingPtr nc = ring("nc4a");
  Subring whole = Subring::whole(nc);
  Subring a = sub(nc, {0, A});
  Subring b = sub(nc, {0, B});
  BoundsEngine engine{nc};
};

TEST_F(Nc4aBounds, SmallestPrimeUpperBoundIsTight) {
  const auto rep = engine.check_all(whole, whole, nc->element(B));
  EXPECT_EQ(rep.smallest_prime, 2u);
  const auto& c = find(rep.checks, "pr_r.upper.smallest_prime");
  EXPECT_TRUE(c.applicable);
  EXPECT_EQ(*c.lhs, q(3, 8));
  EXPECT_EQ(*c.rhs, q(3, 8));
  EXPECT_TRUE(c.holds);
}

TEST_F(Nc4aBounds, CommutatorSubgroupLowerBoundAttained) {
  const auto rep = engine.check_all(whole, whole, nc->element(0));
  const auto& c = find(rep.checks, "pr.lower.commutator_subgroup");
  EXPECT_EQ(*c.lhs, q(5, 8));
  EXPECT_EQ(*c.rhs, q(5, 8));
  EXPECT_TRUE(c.passed());
  EXPECT_TRUE(find(rep.checks, "pr.upper.three_quarters").passed());
  EXPECT_FALSE(find(rep.checks, "pr_r.upper.smallest_prime").applicable);
}

TEST_F(Nc4aBounds, EveryRecordHoldsOnTheFullPair) {
  for (Index r = 0; r < 4; ++r) {
    const auto rep = engine.check_all(whole, whole, nc->element(r));
    for (const auto& c : rep.checks) EXPECT_TRUE(c.passed()) << c.name << " r=" << r;
  }
}

TEST_F(Nc4aBounds, DoubledCenterProductFailsForCommutativeS) {
  const auto rep = engine.check_all(a, whole, nc->element(B));
  const auto& plain = find(rep.checks, "pr_r.lower.center_product");
  EXPECT_EQ(*plain.lhs, q(1, 4));
  EXPECT_EQ(*plain.rhs, q(1, 4));
  EXPECT_TRUE(plain.holds);
  // Z(S,K) = {0} and Z(K,S) = C_K(A) = {0,A}
  EXPECT_EQ(engine.pair(a, whole).z_ks.size(), 2u);
  const auto& doubled = find(rep.checks, "pr_r.lower.center_product_doubled");
  EXPECT_TRUE(doubled.applicable);
  EXPECT_EQ(*doubled.rhs, q(1, 2));
  EXPECT_FALSE(doubled.holds);
  const auto& guarded = find(rep.checks, "pr_r.lower.center_product_doubled.noncentral_witness");
  EXPECT_FALSE(guarded.applicable);
}

TEST_F(Nc4aBounds, DoubledCenterProductWithNoncentralWitness) {
  const auto rep = engine.check_all(whole, whole, nc->element(B));
  const auto& guarded = find(rep.checks, "pr_r.lower.center_product_doubled.noncentral_witness");
  EXPECT_TRUE(guarded.applicable);
  EXPECT_EQ(*guarded.rhs, q(2, 16));
  EXPECT_TRUE(guarded.holds);
}

TEST_F(Nc4aBounds, GuardsReportInapplicability) {
  const auto rep = engine.check_all(a, whole, nc->element(0));
  const auto& lower = find(rep.checks, "pr_r.lower.center_product");
  EXPECT_FALSE(lower.applicable);
  EXPECT_EQ(lower.reason, "r = 0");
  EXPECT_TRUE(lower.passed());
  const auto rep2 = engine.check_all(whole, a, nc->element(0));
  EXPECT_FALSE(find(rep2.checks, "pr.le_index_times_pr_k").applicable);
  const auto z = ring("zn:4");
  const auto wz = Subring::whole(z);
  const auto rz = check_all(wz, wz, z->element(0));
  EXPECT_FALSE(find(rz.checks, "pr.upper.noncommuting_pair").applicable);
  EXPECT_TRUE(find(rz.checks, "pr_r.one_iff_trivial").equality_attained());
}

TEST_F(Nc4aBounds, EqualityConditions) {
  const auto r0 = engine.check_all(whole, whole, nc->element(0));
  const auto& le = find(r0.checks, "pr_r.le_pr");
  EXPECT_TRUE(*le.equality_condition_met);
  EXPECT_TRUE(le.equality_attained());
  const auto rb = engine.check_all(whole, whole, nc->element(B));
  EXPECT_FALSE(rb.checks.empty());
  EXPECT_FALSE(find(rb.checks, "pr_r.le_pr").equality_attained());
  const auto rc = engine.check_all(whole, whole, nc->element(C));
  EXPECT_TRUE(find(rc.checks, "pr_r.zero_iff_outside_support").equality_attained());
}

TEST(CheckRecord, EqualityMismatchFails) {
  auto c = CheckRecord::make("x", q(1, 2), Relation::Le, q(1, 2));
  c.with_equality(EqualityMode::Iff, false);
  EXPECT_TRUE(c.holds);
  EXPECT_FALSE(c.passed());
  auto d = CheckRecord::make("y", q(1, 3), Relation::Le, q(1, 2));
  d.with_equality(EqualityMode::If, false);
  EXPECT_TRUE(d.passed());
  d.with_equality(EqualityMode::If, true);
  EXPECT_FALSE(d.passed());
  EXPECT_TRUE(CheckRecord::skipped("z", "r = 0").passed());
}

TEST(XSet, Examples) {
  const auto nc = ring("nc4a");
  const auto whole = Subring::whole(nc);
  EXPECT_TRUE(x_set(whole, whole).empty());
  const auto zero = Subring::zero(nc);
  EXPECT_EQ(members(x_set(whole, zero)), (std::vector<Index>{0, 1, 2, 3}));
  EXPECT_EQ(members(x_set(zero, zero)), (std::vector<Index>{0}));
  EXPECT_TRUE(x_set(zero, whole).empty());
}

TEST_F(Nc4aBounds, NestedExamples) {
  const auto recs = engine.check_nested(a, whole, whole, whole, nc->element(B));
  const auto& idx = find(recs, "nested.pr_r_index_bound");
  EXPECT_EQ(*idx.lhs, q(1, 4));
  EXPECT_EQ(*idx.rhs, q(3, 4));
  EXPECT_TRUE(idx.passed());
  const auto& wr = find(recs, "nested.pr_r_against_whole_ring");
  EXPECT_TRUE(wr.applicable);
  EXPECT_EQ(*wr.rhs, q(5, 4));

  const auto same = engine.check_nested(a, a, whole, whole, nc->element(0));
  EXPECT_TRUE(find(same, "nested.pr_monotone_in_k").equality_attained());
  EXPECT_TRUE(find(same, "nested.pr_refined_lower_in_k").equality_attained());

  const auto grow = engine.check_nested(a, a, a, whole, nc->element(0));
  const auto& mono = find(grow, "nested.pr_monotone_in_k");
  EXPECT_EQ(*mono.lhs, q(1));
  EXPECT_EQ(*mono.rhs, q(3, 4));
  const auto& refined = find(grow, "nested.pr_refined_lower_in_k");
  EXPECT_EQ(*refined.lhs, q(3, 4));
  EXPECT_EQ(*refined.rhs, q(3, 4));
  EXPECT_TRUE(refined.passed());

  EXPECT_ERROR(NotNested, engine.check_nested(whole, a, whole, whole, nc->element(0)));
}

TEST_F(Nc4aBounds, Characterizations) {
  const auto ca = engine.characterize_quotients(a, whole);
  EXPECT_EQ(ca.s_quotient, IsoType{2});
  EXPECT_EQ(ca.k_quotient, IsoType{2});
  EXPECT_FALSE(ca.s_equals_k);
  for (auto name : {"characterize.cyclic_pair.s_quotient_order", "characterize.cyclic_pair.k_quotient_order",
                    "characterize.cyclic_pair.distinct", "converse.three_quarters", "converse.cyclic_quotient.exact"}) {
    const auto& c = find(ca.checks, name);
    EXPECT_TRUE(c.applicable) << name;
    EXPECT_TRUE(c.passed()) << name;
  }
  const auto cw = engine.characterize_quotients(whole, whole);
  EXPECT_EQ(cw.s_quotient, (IsoType{2, 2}));
  EXPECT_TRUE(cw.s_equals_k);
  for (auto name : {"characterize.elementary_pair.s_quotient_order", "characterize.elementary_pair.s_quotient_exponent",
                    "converse.five_eighths", "converse.elementary_quotient.exact", "structure.quotient_not_cyclic",
                    "pr.exact.uniform_commutator_images"}) {
    const auto& c = find(cw.checks, name);
    EXPECT_TRUE(c.applicable) << name;
    EXPECT_TRUE(c.passed()) << name;
  }
}

TEST_F(Nc4aBounds, FactorInequality) {
  const auto zero = Subring::zero(nc);
  const auto z = engine.check_factor_inequality(whole, whole, zero);
  EXPECT_EQ(*z.lhs, *z.rhs);
  EXPECT_TRUE(*z.equality_condition_met);
  const auto f = engine.check_factor_inequality(whole, whole, b);
  EXPECT_EQ(*f.lhs, q(5, 8));
  EXPECT_EQ(*f.rhs, q(1));
  EXPECT_TRUE(f.passed());
  EXPECT_FALSE(*f.equality_condition_met);
  const auto self = engine.check_factor_inequality(b, b, b);
  EXPECT_EQ(*self.lhs, *self.rhs);
  EXPECT_ERROR(NotAnIdeal, engine.check_factor_inequality(whole, whole, a));
  EXPECT_ERROR(NotContained, engine.check_factor_inequality(a, whole, b));
}

TEST_F(Nc4aBounds, CentralizerQuotient) {
  const auto zero = Subring::zero(nc);
  for (Index x = 0; x < 4; ++x) {
    const auto recs = engine.check_centralizer_quotient(whole, zero, nc->element(x));
    EXPECT_TRUE(find(recs, "centralizer_quotient.equality").equality_attained());
  }
  const auto recs = engine.check_centralizer_quotient(whole, b, nc->element(A));
  const auto& inc = find(recs, "centralizer_quotient.inclusion");
  EXPECT_TRUE(inc.passed());
  // C_H(A) = {0,A} maps to one nonzero coset; H/N is commutative of order 2.
  EXPECT_EQ(*find(recs, "centralizer_quotient.equality").lhs, q(2));
  EXPECT_EQ(*find(recs, "centralizer_quotient.equality").rhs, q(2));
  const auto central = engine.check_centralizer_quotient(whole, b, nc->element(0));
  EXPECT_EQ(*find(central, "centralizer_quotient.equality").lhs, q(2));
  EXPECT_ERROR(NotAnIdeal, engine.check_centralizer_quotient(whole, a, nc->element(0)));
  EXPECT_ERROR(NotContained, engine.check_centralizer_quotient(a, b, nc->element(0)));
}

TEST_F(Nc4aBounds, StructureRecords) {
  for (const auto& s : enumerate_subrings(nc))
    for (const auto& k : enumerate_subrings(nc))
      for (const auto& c : engine.check_structure(s, k)) EXPECT_TRUE(c.passed()) << c.name;
}

TEST(Bounds, NoncommutativeSubringPrimeFlag) {
  const auto r = ring("row2:3*zn:2");
  const auto z2 = ring("zn:2");
  const auto s = product_subring(r, Subring::whole(ring("row2:3")), Subring::zero(z2));
  BoundsEngine engine(r);
  const auto rep = engine.check_all(s, s, r->element(0));
  EXPECT_EQ(rep.smallest_prime, 2u);
  const auto& c = find(rep.checks, "pr.upper.noncommutative_subring");
  ASSERT_TRUE(c.applicable);
  EXPECT_EQ(*c.rhs, q(11, 27));
  EXPECT_NE(c.witness.find("least prime of |S| is 3"), std::string::npos);
  EXPECT_TRUE(c.passed());
}

TEST(Bounds, AllRecordsOnUpperTriangular) {
  const auto r = ring("ut2:2");
  BoundsEngine engine(r);
  const auto subs = enumerate_subrings(r);
  for (const auto& s : subs)
    for (const auto& k : subs) {
      for (const auto& c : engine.characterize_quotients(s, k).checks) EXPECT_TRUE(c.passed()) << c.name;
      for (Index x = 0; x < r->order(); ++x)
        for (const auto& c : engine.check_all(s, k, r->element(x)).checks)
          if (c.name != "pr_r.lower.center_product_doubled") EXPECT_TRUE(c.passed()) << c.name;
    }
}
