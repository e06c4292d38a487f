#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ringprob/bounds.hpp"
#include "ringprob/subring.hpp"

namespace ringprob {

// Maps are keyed by ring indices. Coset maps send the least representative of
// a coset to the least representative of its image; psi maps elements of
// [S1,K1] to elements of [S2,K2].
using ElementMap = std::map<Index, Index>;

struct IsoclinismWitness {
  Subring s1, k1;
  Subring s2, k2;
  ElementMap phi;  // K1/Z(S1,K1) -> K2/Z(S2,K2)
  ElementMap psi;  // [S1,K1] -> [S2,K2]
};

struct SearchOptions {
  // Skip candidates early when quotient or commutator iso types differ.
  bool prune = true;
};

// First witness in the deterministic search order: phi candidates outer,
// psi inner, generator images ascending. Requires S1 in K1 and S2 in K2.
std::optional<IsoclinismWitness> find_z_isoclinism(const Subring& s1, const Subring& k1,
                                                   const Subring& s2, const Subring& k2,
                                                   SearchOptions options = {});

// Rechecks bijectivity, additivity, S-preservation and compatibility over
// every pair of coset members.
bool verify_witness(const IsoclinismWitness& w);

IsoclinismWitness inverse(const IsoclinismWitness& w);

// Pr_r(S1,K1) = Pr_psi(r)(S2,K2) for every r in [S1,K1]. Throws InvalidWitness.
std::vector<CheckRecord> check_invariance(const IsoclinismWitness& w);

struct PairwiseMaps {
  Subring s1, k1;
  Subring s2, k2;
  ElementMap phi1;  // S1/Z(S1,R1) -> S2/Z(S2,R2)
  ElementMap phi2;  // K1/Z(K1,R1) -> K2/Z(K2,R2)
  ElementMap psi;   // [S1,K1] -> [S2,K2]
};

std::optional<PairwiseMaps> find_pairwise_maps(const Subring& s1, const Subring& k1,
                                               const Subring& s2, const Subring& k2);

// Checks the commutator maps are well defined on cosets (IllDefinedAMap), the
// square commutes (SquareDoesNotCommute), the maps are isomorphisms
// (InvalidWitness), then records Pr_r equality for every r in [S1,K1].
std::vector<CheckRecord> check_pairwise_isoclinism(const PairwiseMaps& maps);

std::string witness_to_json(const IsoclinismWitness& w);

}  // namespace ringprob
