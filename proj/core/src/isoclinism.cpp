#include "ringprob/isoclinism.hpp"

#include <set>

#include "json.hpp"

#include "ringprob/errors.hpp"

namespace ringprob {
namespace {

Index rep_of(const QuotientGroup& q, Index x) {
  return q.representatives[static_cast<std::size_t>(q.coset_of[x])];
}

// Members of the coset with representative `rep`.
std::vector<Index> coset_members(const QuotientGroup& q, Index rep) {
  std::vector<Index> out;
  const auto c = q.coset_of[rep];
  for (Index x : q.parent.members())
    if (q.coset_of[x] == c) out.push_back(x);
  return out;
}

bool is_bijection_onto(const ElementMap& m, const std::vector<Index>& domain,
                       const std::vector<Index>& codomain) {
  if (m.size() != domain.size() || domain.size() != codomain.size()) return false;
  std::set<Index> dom(domain.begin(), domain.end()), cod(codomain.begin(), codomain.end()), seen;
  for (const auto& [a, b] : m) {
    if (!dom.contains(a) || !cod.contains(b) || !seen.insert(b).second) return false;
  }
  return true;
}

bool is_coset_isomorphism(const QuotientGroup& q1, const QuotientGroup& q2, const ElementMap& m) {
  if (!is_bijection_onto(m, q1.representatives, q2.representatives)) return false;
  const auto& r1 = *q1.ring;
  const auto& r2 = *q2.ring;
  for (const auto& [a, fa] : m)
    for (const auto& [b, fb] : m)
      if (m.at(rep_of(q1, r1.add(a, b))) != rep_of(q2, r2.add(fa, fb))) return false;
  return true;
}

bool is_subgroup_isomorphism(const AdditiveSubgroup& c1, const AdditiveSubgroup& c2,
                             const ElementMap& m) {
  if (!is_bijection_onto(m, c1.members.members(), c2.members.members())) return false;
  for (const auto& [a, fa] : m)
    for (const auto& [b, fb] : m)
      if (m.at(c1.ring->add(a, b)) != c2.ring->add(fa, fb)) return false;
  return true;
}

ElementMap coset_map(const QuotientGroup& q1, const QuotientGroup& q2, const GroupIso& f) {
  ElementMap m;
  for (std::size_t a = 0; a < q1.size(); ++a) m[q1.representatives[a]] = q2.representatives[f(a)];
  return m;
}

ElementMap subgroup_map(const AbelianGroup& g1, const AbelianGroup& g2, const GroupIso& f) {
  ElementMap m;
  for (std::size_t a = 0; a < g1.order(); ++a) m[g1.labels()[a]] = g2.labels()[f(a)];
  return m;
}

// Finds psi: C1 -> C2 extending `forced`; nullopt when none exists.
std::optional<ElementMap> extend_psi(const AbelianGroup& c1, const AbelianGroup& c2,
                                     const ElementMap& forced, bool prune) {
  std::optional<ElementMap> found;
  for_each_isomorphism(
      c1, c2,
      [&](const GroupIso& f) {
        for (const auto& [x, y] : forced)
          if (c2.labels()[f(static_cast<Index>(c1.local_of(x)))] != y) return true;
        found = subgroup_map(c1, c2, f);
        return false;
      },
      prune);
  return found;
}

// Adds x -> y to a partial map; false if it conflicts or breaks injectivity.
bool force(ElementMap& m, std::set<Index>& images, Index x, Index y) {
  auto [it, fresh] = m.emplace(x, y);
  if (!fresh) return it->second == y;
  return images.insert(y).second;
}

std::vector<CheckRecord> invariance_records(const std::string& name, const Subring& s1,
                                            const Subring& k1, const Subring& s2,
                                            const Subring& k2, const ElementMap& psi) {
  const auto d1 = pr_distribution(s1, k1);
  const auto d2 = pr_distribution(s2, k2);
  std::vector<CheckRecord> out;
  for (const auto& [r, image] : psi) {
    auto rec = CheckRecord::make(name, d1.at(r).value(), Relation::Eq, d2.at(image).value());
    rec.with_witness("r = " + std::to_string(r) + ", psi(r) = " + std::to_string(image));
    out.push_back(std::move(rec));
  }
  return out;
}

}  // namespace

std::optional<IsoclinismWitness> find_z_isoclinism(const Subring& s1, const Subring& k1,
                                                   const Subring& s2, const Subring& k2,
                                                   SearchOptions options) {
  require_same_ring(s1.ring_id(), k1.ring_id());
  require_same_ring(s2.ring_id(), k2.ring_id());
  if (!s1.is_subset_of(k1) || !s2.is_subset_of(k2))
    throw Error(ErrorKind::NotContained, "isoclinism needs S1 in K1 and S2 in K2");
  const auto& R1 = s1.ring();
  const auto& R2 = s2.ring();
  const auto z1 = relative_center(s1, k1), z2 = relative_center(s2, k2);
  const auto q1 = quotient_group(k1, z1), q2 = quotient_group(k2, z2);
  const auto c1 = commutator_subgroup(s1, k1), c2 = commutator_subgroup(s2, k2);
  if (options.prune) {
    if (q1.iso_type != q2.iso_type || c1.iso_type != c2.iso_type) return std::nullopt;
    if (quotient_group(s1, z1).iso_type != quotient_group(s2, z2).iso_type) return std::nullopt;
  }
  const auto g1 = q1.as_group(), g2 = q2.as_group();
  const auto cg1 = AbelianGroup::from_ring_subset(R1, c1.members);
  const auto cg2 = AbelianGroup::from_ring_subset(R2, c2.members);

  std::vector<std::size_t> s_cosets1, s_cosets2;
  {
    std::set<std::size_t> a, b;
    for (Index x : s1.members()) a.insert(static_cast<std::size_t>(q1.coset_of[x]));
    for (Index x : s2.members()) b.insert(static_cast<std::size_t>(q2.coset_of[x]));
    s_cosets1.assign(a.begin(), a.end());
    s_cosets2.assign(b.begin(), b.end());
  }
  const std::set<std::size_t> s_target(s_cosets2.begin(), s_cosets2.end());

  std::optional<IsoclinismWitness> found;
  for_each_isomorphism(
      g1, g2,
      [&](const GroupIso& phi) {
        if (s_cosets1.size() != s_cosets2.size()) return true;
        for (auto a : s_cosets1)
          if (!s_target.contains(phi(static_cast<Index>(a)))) return true;
        ElementMap forced;
        std::set<Index> images;
        for (auto a : s_cosets1)
          for (std::size_t b = 0; b < q1.size(); ++b) {
            const Index u1 = q1.representatives[a], v1 = q1.representatives[b];
            const Index u2 = q2.representatives[phi(static_cast<Index>(a))];
            const Index v2 = q2.representatives[phi(static_cast<Index>(b))];
            if (!force(forced, images, R1.commutator(u1, v1), R2.commutator(u2, v2))) return true;
          }
        auto psi = extend_psi(cg1, cg2, forced, options.prune);
        if (!psi) return true;
        found = IsoclinismWitness{s1, k1, s2, k2, coset_map(q1, q2, phi), std::move(*psi)};
        return false;
      },
      options.prune);
  return found;
}

bool verify_witness(const IsoclinismWitness& w) {
  if (w.s1.ring_id() != w.k1.ring_id() || w.s2.ring_id() != w.k2.ring_id()) return false;
  if (!w.s1.is_subset_of(w.k1) || !w.s2.is_subset_of(w.k2)) return false;
  const auto& R1 = w.s1.ring();
  const auto& R2 = w.s2.ring();
  const auto z1 = relative_center(w.s1, w.k1), z2 = relative_center(w.s2, w.k2);
  const auto q1 = quotient_group(w.k1, z1), q2 = quotient_group(w.k2, z2);
  const auto c1 = commutator_subgroup(w.s1, w.k1), c2 = commutator_subgroup(w.s2, w.k2);
  if (!is_coset_isomorphism(q1, q2, w.phi)) return false;
  if (!is_subgroup_isomorphism(c1, c2, w.psi)) return false;

  std::set<Index> s_image, s_reps2;
  for (Index x : w.s1.members()) s_image.insert(w.phi.at(rep_of(q1, x)));
  for (Index x : w.s2.members()) s_reps2.insert(rep_of(q2, x));
  if (s_image != s_reps2) return false;

  for (Index u1 : w.s1.members())
    for (Index v1 : w.k1.members()) {
      const Index target = w.psi.at(R1.commutator(u1, v1));
      const auto us = coset_members(q2, w.phi.at(rep_of(q1, u1)));
      const auto vs = coset_members(q2, w.phi.at(rep_of(q1, v1)));
      for (Index u2 : us)
        for (Index v2 : vs)
          if (R2.commutator(u2, v2) != target) return false;
    }
  return true;
}

IsoclinismWitness inverse(const IsoclinismWitness& w) {
  IsoclinismWitness inv{w.s2, w.k2, w.s1, w.k1, {}, {}};
  for (const auto& [a, b] : w.phi) inv.phi[b] = a;
  for (const auto& [a, b] : w.psi) inv.psi[b] = a;
  return inv;
}

std::vector<CheckRecord> check_invariance(const IsoclinismWitness& w) {
  if (!verify_witness(w)) throw Error(ErrorKind::InvalidWitness, "witness fails verification");
  return invariance_records("isoclinism.invariance", w.s1, w.k1, w.s2, w.k2, w.psi);
}

std::optional<PairwiseMaps> find_pairwise_maps(const Subring& s1, const Subring& k1,
                                               const Subring& s2, const Subring& k2) {
  require_same_ring(s1.ring_id(), k1.ring_id());
  require_same_ring(s2.ring_id(), k2.ring_id());
  const auto& R1 = s1.ring();
  const auto& R2 = s2.ring();
  const auto w1 = Subring::whole(s1.ring_ptr()), w2 = Subring::whole(s2.ring_ptr());
  const auto qs1 = quotient_group(s1, relative_center(s1, w1));
  const auto qs2 = quotient_group(s2, relative_center(s2, w2));
  const auto qk1 = quotient_group(k1, relative_center(k1, w1));
  const auto qk2 = quotient_group(k2, relative_center(k2, w2));
  const auto c1 = commutator_subgroup(s1, k1), c2 = commutator_subgroup(s2, k2);
  if (qs1.iso_type != qs2.iso_type || qk1.iso_type != qk2.iso_type || c1.iso_type != c2.iso_type)
    return std::nullopt;
  const auto gs1 = qs1.as_group(), gs2 = qs2.as_group();
  const auto gk1 = qk1.as_group(), gk2 = qk2.as_group();
  const auto cg1 = AbelianGroup::from_ring_subset(R1, c1.members);
  const auto cg2 = AbelianGroup::from_ring_subset(R2, c2.members);

  std::optional<PairwiseMaps> found;
  for_each_isomorphism(gs1, gs2, [&](const GroupIso& f1) {
    for_each_isomorphism(gk1, gk2, [&](const GroupIso& f2) {
      ElementMap forced;
      std::set<Index> images;
      for (std::size_t a = 0; a < qs1.size(); ++a)
        for (std::size_t b = 0; b < qk1.size(); ++b) {
          const Index x1 = qs1.representatives[a], y1 = qk1.representatives[b];
          const Index x2 = qs2.representatives[f1(static_cast<Index>(a))];
          const Index y2 = qk2.representatives[f2(static_cast<Index>(b))];
          if (!force(forced, images, R1.commutator(x1, y1), R2.commutator(x2, y2))) return true;
        }
      auto psi = extend_psi(cg1, cg2, forced, true);
      if (!psi) return true;
      found = PairwiseMaps{s1, k1, s2, k2, coset_map(qs1, qs2, f1), coset_map(qk1, qk2, f2),
                           std::move(*psi)};
      return false;
    });
    return !found;
  });
  return found;
}

std::vector<CheckRecord> check_pairwise_isoclinism(const PairwiseMaps& m) {
  require_same_ring(m.s1.ring_id(), m.k1.ring_id());
  require_same_ring(m.s2.ring_id(), m.k2.ring_id());
  const auto& R1 = m.s1.ring();
  const auto& R2 = m.s2.ring();
  const auto w1 = Subring::whole(m.s1.ring_ptr()), w2 = Subring::whole(m.s2.ring_ptr());
  const auto qs1 = quotient_group(m.s1, relative_center(m.s1, w1));
  const auto qs2 = quotient_group(m.s2, relative_center(m.s2, w2));
  const auto qk1 = quotient_group(m.k1, relative_center(m.k1, w1));
  const auto qk2 = quotient_group(m.k2, relative_center(m.k2, w2));
  const auto c1 = commutator_subgroup(m.s1, m.k1), c2 = commutator_subgroup(m.s2, m.k2);

  auto check_well_defined = [](const FiniteRing& R, const Subring& s, const Subring& k,
                               const QuotientGroup& qs, const QuotientGroup& qk, const char* side) {
    for (Index x : s.members())
      for (Index y : k.members())
        if (R.commutator(x, y) != R.commutator(rep_of(qs, x), rep_of(qk, y)))
          throw Error(ErrorKind::IllDefinedAMap,
                      std::string("commutator depends on coset representatives in pair ") + side +
                          " at (" + std::to_string(x) + "," + std::to_string(y) + ")");
  };
  check_well_defined(R1, m.s1, m.k1, qs1, qk1, "1");
  check_well_defined(R2, m.s2, m.k2, qs2, qk2, "2");

  for (Index x : qs1.representatives)
    for (Index y : qk1.representatives) {
      const auto lhs_it = m.psi.find(R1.commutator(x, y));
      const auto fx = m.phi1.find(x), fy = m.phi2.find(y);
      if (lhs_it == m.psi.end() || fx == m.phi1.end() || fy == m.phi2.end() ||
          lhs_it->second != R2.commutator(fx->second, fy->second))
        throw Error(ErrorKind::SquareDoesNotCommute,
                    "square fails at cosets (" + std::to_string(x) + "," + std::to_string(y) + ")");
    }

  if (!is_coset_isomorphism(qs1, qs2, m.phi1) || !is_coset_isomorphism(qk1, qk2, m.phi2) ||
      !is_subgroup_isomorphism(c1, c2, m.psi))
    throw Error(ErrorKind::InvalidWitness, "phi1, phi2 and psi must be additive isomorphisms");
  return invariance_records("isoclinism.pairwise_invariance", m.s1, m.k1, m.s2, m.k2, m.psi);
}

std::string witness_to_json(const IsoclinismWitness& w) {
  auto members = [](const Subring& s) {
    return std::vector<Index>(s.members().begin(), s.members().end());
  };
  auto table = [](const ElementMap& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& [a, b] : m) rows.push_back({a, b});
    return rows;
  };
  nlohmann::json j{{"pair1", {{"s", members(w.s1)}, {"k", members(w.k1)}}},
                   {"pair2", {{"s", members(w.s2)}, {"k", members(w.k2)}}},
                   {"phi", table(w.phi)},
                   {"psi", table(w.psi)}};
  return j.dump(2);
}

}  // namespace ringprob
