#include "fixtures.hpp"
#include "ringprob/isoclinism.hpp"
#include "ringprob/probability.hpp"

using namespace fx;

class Isoclinism : public ::testing::Test {
 protected:
  RingPtr nc = ring("nc4a");
  RingPtr z2 = ring("zn:2");
  RingPtr prod = share(direct_product(*nc, *z2));
  Subring whole = Subring::whole(nc);
  Subring pwhole = Subring::whole(prod);
};

TEST_F(Isoclinism, SelfWitnessIsIdentity) {
  const auto w = find_z_isoclinism(whole, whole, whole, whole);
  ASSERT_TRUE(w);
  for (const auto& [x, y] : w->phi) EXPECT_EQ(x, y);
  for (const auto& [x, y] : w->psi) EXPECT_EQ(x, y);
  EXPECT_TRUE(verify_witness(*w));
  for (const auto& c : check_invariance(*w)) EXPECT_TRUE(c.passed());
}

TEST_F(Isoclinism, Nc4aAndProductWithZ2) {
  const auto w = find_z_isoclinism(whole, whole, pwhole, pwhole);
  ASSERT_TRUE(w);
  EXPECT_TRUE(verify_witness(*w));
  EXPECT_EQ(w->phi.size(), 4u);
  EXPECT_EQ(w->psi.size(), 2u);
  const auto recs = check_invariance(*w);
  ASSERT_EQ(recs.size(), 2u);
  EXPECT_EQ(*recs[0].lhs, q(5, 8));
  EXPECT_EQ(*recs[0].rhs, q(5, 8));
  EXPECT_EQ(*recs[1].lhs, q(3, 8));
  EXPECT_EQ(*recs[1].rhs, q(3, 8));
  const Index psi_b = w->psi.at(B);
  EXPECT_EQ(pr_distribution(pwhole, pwhole).at(psi_b).value(), q(3, 8));
}

TEST_F(Isoclinism, NegativeControl) {
  const auto z4 = ring("zn:4");
  const auto wz = Subring::whole(z4);
  EXPECT_FALSE(find_z_isoclinism(whole, whole, wz, wz));
  EXPECT_FALSE(find_z_isoclinism(whole, whole, wz, wz, {.prune = false}));
}

TEST_F(Isoclinism, Symmetric) {
  const auto w = find_z_isoclinism(whole, whole, pwhole, pwhole);
  ASSERT_TRUE(w);
  EXPECT_TRUE(verify_witness(inverse(*w)));
  EXPECT_TRUE(find_z_isoclinism(pwhole, pwhole, whole, whole));
}

TEST_F(Isoclinism, TamperedPsiRejected) {
  auto w = find_z_isoclinism(whole, whole, pwhole, pwhole);
  ASSERT_TRUE(w);
  std::swap(w->psi.begin()->second, std::next(w->psi.begin())->second);
  EXPECT_FALSE(verify_witness(*w));
  EXPECT_ERROR(InvalidWitness, check_invariance(*w));
}

TEST_F(Isoclinism, HandBuiltIdentityWitness) {
  IsoclinismWitness w{whole, whole, whole, whole, {{0, 0}, {1, 1}, {2, 2}, {3, 3}}, {{0, 0}, {1, 1}}};
  EXPECT_TRUE(verify_witness(w));
  w.phi[A] = C;
  w.phi[C] = A;
  // swapping A and C is additive and still compatible since [A,k] = [C,k]
  EXPECT_TRUE(verify_witness(w));
  w.phi[B] = A;
  EXPECT_FALSE(verify_witness(w));
}

TEST_F(Isoclinism, PruningIsSound) {
  const std::vector<RingPtr> rings{nc, ring("zn:4"), ring("ut2:2"), prod, ring("row2:3")};
  for (const auto& r1 : rings)
    for (const auto& r2 : rings) {
      const auto subs1 = enumerate_subrings(r1);
      const auto subs2 = enumerate_subrings(r2);
      for (const auto& s1 : subs1)
        for (const auto& k1 : subs1) {
          if (!s1.is_subset_of(k1)) continue;
          for (const auto& s2 : subs2)
            for (const auto& k2 : subs2) {
              if (!s2.is_subset_of(k2) || s1.size() * k2.size() != s2.size() * k1.size()) continue;
              const bool pruned = find_z_isoclinism(s1, k1, s2, k2).has_value();
              const bool full = find_z_isoclinism(s1, k1, s2, k2, {.prune = false}).has_value();
              EXPECT_EQ(pruned, full);
              EXPECT_EQ(full, find_z_isoclinism(s2, k2, s1, k1).has_value());
            }
        }
    }
}

TEST_F(Isoclinism, WitnessesPreserveDistributions) {
  const auto r = ring("ut2:2");
  const auto subs = enumerate_subrings(r);
  for (const auto& s1 : subs)
    for (const auto& k1 : subs)
      for (const auto& s2 : subs)
        for (const auto& k2 : subs) {
          if (!s1.is_subset_of(k1) || !s2.is_subset_of(k2)) continue;
          const auto w = find_z_isoclinism(s1, k1, s2, k2);
          if (!w) continue;
          EXPECT_TRUE(verify_witness(*w));
          for (const auto& c : check_invariance(*w)) EXPECT_TRUE(c.passed());
        }
}

TEST_F(Isoclinism, PairwiseIdentity) {
  const auto maps = find_pairwise_maps(whole, whole, whole, whole);
  ASSERT_TRUE(maps);
  for (const auto& c : check_pairwise_isoclinism(*maps)) EXPECT_TRUE(c.passed());
}

TEST_F(Isoclinism, PairwiseWithProduct) {
  const auto a = sub(nc, {0, A});
  const auto a2 = product_subring(prod, a, Subring::whole(z2));
  const auto maps = find_pairwise_maps(a, whole, a2, pwhole);
  ASSERT_TRUE(maps);
  const auto recs = check_pairwise_isoclinism(*maps);
  ASSERT_FALSE(recs.empty());
  for (const auto& c : recs) EXPECT_TRUE(c.passed());
  EXPECT_EQ(*recs.back().lhs, q(1, 4));
}

TEST_F(Isoclinism, PairwiseSwappedPsi) {
  auto maps = find_pairwise_maps(whole, whole, pwhole, pwhole);
  ASSERT_TRUE(maps);
  maps->psi = {{0, maps->psi.at(B)}, {B, 0}};
  EXPECT_ERROR(SquareDoesNotCommute, check_pairwise_isoclinism(*maps));
}

TEST_F(Isoclinism, WitnessJson) {
  const auto w = find_z_isoclinism(whole, whole, whole, whole);
  ASSERT_TRUE(w);
  const auto text = witness_to_json(*w);
  EXPECT_NE(text.find("\"phi\""), std::string::npos);
  EXPECT_NE(text.find("\"psi\""), std::string::npos);
}
