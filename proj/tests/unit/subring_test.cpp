#include "fixtures.hpp"
#include "oracles.hpp"
#include "ringprob/subring.hpp"

using namespace fx;

TEST(Closure, Examples) {
  const auto nc = ring("nc4a");
  EXPECT_EQ(members(closure(nc, std::vector<Index>{})), (std::vector<Index>{0}));
  EXPECT_EQ(members(closure(nc, std::vector<Index>{A})), (std::vector<Index>{0, A}));
  EXPECT_EQ(closure(nc, std::vector<Index>{A, B}).size(), 4u);
  const auto z6 = ring("zn:6");
  EXPECT_EQ(members(closure(z6, std::vector<Index>{2})), (std::vector<Index>{0, 2, 4}));
}

TEST(Subring, RejectsNonClosedSet) {
  const auto nc = ring("nc4a");
  EXPECT_ERROR(NotClosed, sub(nc, {0, A, B}));
  EXPECT_ERROR(NotClosed, sub(nc, {A}));
}

TEST(EnumerateSubrings, Examples) {
  const auto z4 = ring("zn:4");
  const auto s4 = enumerate_subrings(z4);
  ASSERT_EQ(s4.size(), 3u);
  EXPECT_EQ(members(s4[1]), (std::vector<Index>{0, 2}));
  const auto nc = enumerate_subrings(ring("nc4a"));
  ASSERT_EQ(nc.size(), 5u);
  EXPECT_EQ(members(nc[0]), (std::vector<Index>{0}));
  EXPECT_EQ(members(nc[1]), (std::vector<Index>{0, B}));
  EXPECT_EQ(members(nc[2]), (std::vector<Index>{0, A}));
  EXPECT_EQ(members(nc[3]), (std::vector<Index>{0, C}));
  EXPECT_TRUE(nc[4].is_whole());
}

TEST(EnumerateSubrings, MatchesPowerSetOracle) {
  for (auto spec : {"zn:2", "zn:6", "zn:8", "nc4a", "row2:3", "ut2:2", "nc4a*zn:2", "zn:2*zn:2*zn:2", "m2:2"}) {
    const auto r = ring(spec);
    std::set<oracle::Members> found;
    for (const auto& s : enumerate_subrings(r)) {
      EXPECT_TRUE(s.is_closed());
      found.insert(members(s));
    }
    EXPECT_EQ(found, oracle::powerset_subrings(*r)) << spec;
  }
}

TEST(EnumerateSubrings, Cap) { EXPECT_ERROR(CapExceeded, enumerate_subrings(ring("m2:2"), 8)); }

TEST(Centralizer, Examples) {
  const auto nc = ring("nc4a");
  const auto whole = Subring::whole(nc);
  EXPECT_EQ(centralizer(whole, nc->element(0)), whole);
  EXPECT_EQ(members(centralizer(whole, nc->element(A))), (std::vector<Index>{0, A}));
  for (Index x = 0; x < 4; ++x) EXPECT_TRUE(centralizer(whole, nc->element(x)).is_closed());
  const auto other = share(builtin("nc4a"));
  EXPECT_ERROR(RingMismatch, centralizer(whole, other->element(1)));
}

TEST(RelativeCenter, Examples) {
  const auto nc = ring("nc4a");
  const auto whole = Subring::whole(nc);
  EXPECT_EQ(relative_center(whole, whole), center(nc));
  EXPECT_EQ(members(relative_center(sub(nc, {0, A}), whole)), (std::vector<Index>{0}));
  EXPECT_EQ(members(relative_center(whole, sub(nc, {0, A}))), (std::vector<Index>{0, A}));
  const auto s = sub(nc, {0, C});
  EXPECT_EQ(relative_center(s, Subring::zero(nc)), s);
}

TEST(Commutators, Examples) {
  const auto nc = ring("nc4a");
  const auto whole = Subring::whole(nc);
  EXPECT_EQ(commutator_image(nc->element(0), whole).size(), 1u);
  const auto img = commutator_image(nc->element(A), whole);
  EXPECT_EQ(members(img.members), (std::vector<Index>{0, B}));
  EXPECT_EQ(img.iso_type, IsoType{2});
  EXPECT_EQ(members(commutator_subgroup(whole, whole).members), (std::vector<Index>{0, B}));
  const auto z6 = ring("zn:6");
  EXPECT_EQ(commutator_subgroup(Subring::whole(z6), Subring::whole(z6)).size(), 1u);
}

TEST(Commutators, ImageSizeTimesCentralizerSize) {
  for (auto spec : {"nc4a", "ut2:2", "m2:2", "row2:3"}) {
    const auto r = ring(spec);
    for (const auto& k : enumerate_subrings(r))
      for (Index x = 0; x < r->order(); ++x) {
        const auto img = commutator_image(r->element(x), k);
        std::set<Index> brute;
        std::size_t cent = 0;
        for (Index b : k.members()) {
          brute.insert(oracle::cm(*r, x, b));
          cent += oracle::cm(*r, x, b) == 0;
        }
        EXPECT_EQ(img.size(), brute.size());
        EXPECT_EQ(img.size() * cent, k.size());
      }
  }
}

TEST(TSet, Examples) {
  const auto nc = ring("nc4a");
  const auto whole = Subring::whole(nc);
  const auto a = nc->element(A);
  EXPECT_EQ(members(t_set(a, nc->element(0), whole)), (std::vector<Index>{0, A}));
  EXPECT_EQ(members(t_set(a, nc->element(B), whole)), (std::vector<Index>{B, C}));
  EXPECT_TRUE(t_set(a, nc->element(C), whole).empty());
}

TEST(Ideals, Nc4a) {
  const auto nc = ring("nc4a");
  EXPECT_TRUE(is_ideal(sub(nc, {0, B})));
  EXPECT_FALSE(is_ideal(sub(nc, {0, A})));
  const auto q = quotient_ring(sub(nc, {0, B}));
  EXPECT_EQ(q.ring->order(), 2u);
  EXPECT_EQ(q.project(A), q.project(C));
  EXPECT_ERROR(NotAnIdeal, quotient_ring(sub(nc, {0, A})));
}

TEST(Ideals, TrivialQuotients) {
  const auto r = ring("ut2:2");
  const auto q0 = quotient_ring(Subring::zero(r));
  EXPECT_EQ(q0.ring->order(), r->order());
  for (Index a = 0; a < r->order(); ++a)
    for (Index b = 0; b < r->order(); ++b)
      EXPECT_EQ(q0.ring->mul(q0.project(a), q0.project(b)), q0.project(r->mul(a, b)));
  EXPECT_EQ(quotient_ring(Subring::whole(r)).ring->order(), 1u);
}

TEST(QuotientGroup, Examples) {
  const auto nc = ring("nc4a");
  const auto whole = Subring::whole(nc);
  EXPECT_EQ(quotient_group(whole, Subring::zero(nc)).iso_type, (IsoType{2, 2}));
  const auto a = sub(nc, {0, A});
  EXPECT_EQ(quotient_group(a, a).size(), 1u);
  EXPECT_EQ(quotient_group(a, a).iso_type, IsoType{});
  const auto q = quotient_group(whole, sub(nc, {0, B}));
  EXPECT_EQ(q.iso_type, IsoType{2});
  EXPECT_EQ(q.representatives, (std::vector<Index>{0, A}));
  EXPECT_ERROR(NotASubgroup, quotient_group(a, sub(nc, {0, B})));
}

TEST(QuotientGroup, CosetsPartitionParent) {
  const auto r = ring("m2:2");
  for (const auto& g : enumerate_subrings(r))
    for (const auto& h : enumerate_subrings(r)) {
      if (!h.is_subset_of(g)) continue;
      const auto q = quotient_group(g, h);
      EXPECT_EQ(q.size() * h.size(), g.size());
      for (Index x : g.members()) {
        const Index rep = q.representatives[static_cast<std::size_t>(q.coset_of[x])];
        EXPECT_TRUE(h.contains(r->sub(x, rep)));
      }
    }
}
