#include "fixtures.hpp"
#include "oracles.hpp"
#include "ringprob/probability.hpp"

using namespace fx;

TEST(ProbValue, KeepsRawCounts) {
  const ProbValue v(10, 16);
  EXPECT_EQ(v.raw_count(), 10);
  EXPECT_EQ(v.raw_total(), 16);
  EXPECT_EQ(v.fraction(), "5/8");
  EXPECT_EQ(v.decimal(), "0.625000");
  EXPECT_EQ(ProbValue(1, 3).decimal(), "0.333333");
  EXPECT_EQ(ProbValue(2, 3).decimal(), "0.666667");
  EXPECT_ERROR(InvalidArgument, ProbValue(3, 2));
  EXPECT_ERROR(InvalidArgument, ProbValue(0, 0));
}

TEST(PrNaive, Examples) {
  const auto nc = ring("nc4a");
  const auto whole = Subring::whole(nc);
  const auto zero = pr_r_naive(whole, whole, nc->element(0));
  EXPECT_EQ(zero.raw_count(), 10);
  EXPECT_EQ(zero.raw_total(), 16);
  EXPECT_EQ(zero.value(), q(5, 8));
  EXPECT_EQ(pr_r_naive(whole, whole, nc->element(B)).value(), q(3, 8));
  const auto z6 = ring("zn:6");
  EXPECT_EQ(pr_r_naive(Subring::whole(z6), Subring::whole(z6), z6->element(0)).value(), q(1));
}

TEST(PrFormula, Examples) {
  const auto nc = ring("nc4a");
  const auto whole = Subring::whole(nc);
  const auto a = sub(nc, {0, A});
  const auto v = pr_r_formula(a, whole, nc->element(B));
  EXPECT_EQ(v.value(), q(1, 4));
  EXPECT_EQ(v.raw_total(), 8);
  EXPECT_EQ(pr_r_formula(whole, whole, nc->element(C)).value(), q(0));
  EXPECT_EQ(pr_r_formula(whole, whole, nc->element(0)).raw_count(), 10);
}

TEST(PrFormula, AgreesWithOracleEverywhere) {
  for (auto spec : {"nc4a", "ut2:2", "row2:3", "nc4a*zn:2", "zn:6"}) {
    const auto r = ring(spec);
    const auto subs = enumerate_subrings(r);
    for (const auto& s : subs)
      for (const auto& k : subs) {
        CentralizerCache cache(k);
        for (Index x = 0; x < r->order(); ++x) {
          const auto expected = oracle::pair_count(*r, members(s), members(k), x);
          const auto naive = pr_r_naive(s, k, r->element(x));
          const auto formula = pr_r_formula(s, cache, x);
          EXPECT_EQ(naive.raw_count(), expected);
          EXPECT_EQ(naive.value(), Rational(expected, s.size() * k.size()));
          EXPECT_EQ(formula, naive);
          EXPECT_EQ(pr_r(s, cache, x), naive);
        }
      }
  }
}

TEST(Pr, Examples) {
  const auto nc = ring("nc4a");
  const auto whole = Subring::whole(nc);
  EXPECT_EQ(pr(sub(nc, {0, A}), whole).value(), q(3, 4));
  EXPECT_EQ(pr(whole, whole).value(), q(5, 8));
  CentralizerCache cache(whole);
  EXPECT_EQ(pr_from_image_sizes(whole, cache), q(5, 8));
  for (auto spec : {"zn:8", "nc4a", "ut2:2", "zn:2*zn:3"}) {
    const auto r = ring(spec);
    const auto w = Subring::whole(r);
    EXPECT_EQ(pr(w, w).value() == 1, r->is_commutative()) << spec;
  }
}

TEST(Pr, Symmetric) {
  const auto r = ring("m2:2");
  const auto subs = enumerate_subrings(r);
  for (const auto& s : subs)
    for (const auto& k : subs) EXPECT_EQ(pr(s, k), pr(k, s));
}

TEST(Distribution, Examples) {
  const auto nc = ring("nc4a");
  const auto whole = Subring::whole(nc);
  const auto d = pr_distribution(whole, whole);
  ASSERT_EQ(d.entries.size(), 2u);
  EXPECT_EQ(d.at(0).value(), q(5, 8));
  EXPECT_EQ(d.at(B).value(), q(3, 8));
  EXPECT_EQ(d.at(A).value(), q(0));
  EXPECT_EQ(members(d.support), (std::vector<Index>{0, B}));
  const auto z = ring("zn:4");
  const auto dz = pr_distribution(Subring::whole(z), Subring::whole(z));
  ASSERT_EQ(dz.entries.size(), 1u);
  EXPECT_EQ(dz.at(0).value(), q(1));
}

TEST(Distribution, InvariantsAndFormulaAgreement) {
  for (auto spec : {"ut2:2", "m2:2"}) {
    const auto r = ring(spec);
    const auto subs = enumerate_subrings(r);
    for (const auto& s : subs)
      for (const auto& k : subs) {
        const auto d = pr_distribution(s, k);
        Rational total = 0;
        for (const auto& [x, v] : d.entries) {
          total += v.value();
          EXPECT_TRUE(d.support.contains(x));
          EXPECT_GT(v.value(), 0);
          EXPECT_EQ(v, pr_r_formula(s, k, r->element(x)));
        }
        EXPECT_EQ(total, 1);
        EXPECT_EQ(d.support.count(), d.entries.size());
        CentralizerCache kc(k);
        for (Index x = 0; x < r->order(); ++x) {
          EXPECT_EQ(d.at(x), pr_distribution(k, s).at(r->neg(x)));
          EXPECT_LE(d.at(x).value(), pr(s, kc).value());
        }
      }
  }
}

TEST(Product, Examples) {
  const auto nc = ring("nc4a");
  const auto z2 = ring("zn:2");
  const auto wn = Subring::whole(nc), wz = Subring::whole(z2);
  EXPECT_EQ(pr_r_product(wn, wn, nc->element(B), wz, wz, z2->element(0)).value(), q(3, 8));
  EXPECT_EQ(pr_r_product(wn, wn, nc->element(C), wz, wz, z2->element(0)).value(), q(0));
  EXPECT_EQ(pr_r_product(wn, wn, nc->element(0), wn, wn, nc->element(0)).value(), q(25, 64));
}

TEST(Product, FactorsAgainstOracle) {
  const auto nc = ring("nc4a");
  const auto p = share(direct_product(*nc, *nc));
  const auto subs = enumerate_subrings(nc);
  for (const auto& s1 : subs)
    for (const auto& s2 : subs) {
      const auto s = product_subring(p, s1, s2);
      const auto k = Subring::whole(p);
      for (Index r1 = 0; r1 < 4; ++r1)
        for (Index r2 = 0; r2 < 4; ++r2) {
          const auto expected = oracle::pair_count(*p, members(s), members(k), r1 * 4 + r2);
          EXPECT_EQ(pr_r_product(s1, Subring::whole(nc), nc->element(r1), s2, Subring::whole(nc),
                                 nc->element(r2))
                        .value(),
                    Rational(expected, s.size() * k.size()));
        }
    }
}

TEST(Probability, RingMismatch) {
  const auto a = ring("nc4a");
  const auto b = ring("nc4a");
  EXPECT_ERROR(RingMismatch, pr(Subring::whole(a), Subring::whole(b)));
  EXPECT_ERROR(RingMismatch, pr_r_naive(Subring::whole(a), Subring::whole(a), b->element(0)));
}
