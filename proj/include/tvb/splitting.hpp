#pragma once

#include <random>
#include <utility>
#include <vector>

#include "tvb/matroid.hpp"

namespace tvb {

struct CharacterCount {
    IntVec u;
    int multiplicity = 0;
};

// Every character cut out by a tuple of filtration jump values on the cone's
// rays, whether or not it appears in the splitting. Sorted lexicographically.
std::vector<IntVec> candidate_characters(const ToricBundle& bundle, int cone);

// Characters appearing in any equivariant splitting over the cone, with
// multiplicities from the inclusion-exclusion count. A negative count means
// the filtrations admit no splitting and raises IncompatibleFiltrations.
std::vector<CharacterCount> cone_characters(const ToricBundle& bundle, int cone);

// (E_u, E_{>u}) over the cone: the intersection of the filtrations at the
// pairings <u, v_i>, and the sum of the same at u shifted by each dual
// generator.
std::pair<Subspace, Subspace> cone_subspaces(const ToricBundle& bundle, int cone, const IntVec& u);

struct SplitEntry {
    IntVec u;
    QVec vector;
    int ground_index = -1;
};

// An equivariant decomposition over one maximal cone: rank-many one
// dimensional pieces, each a ground-set vector tagged with its character.
struct ConeSplitting {
    int cone = -1;
    std::vector<SplitEntry> entries;
};

// Deterministic search over ground-set vectors, backtracking across
// characters; exhaustion raises IncompatibleFiltrations.
ConeSplitting splitting_basis(const ToricBundle& bundle, int cone, const GroundSet& ground);

// Same search from a shuffled candidate order; any result is a valid
// splitting, used to confirm choice independence downstream.
ConeSplitting splitting_basis_shuffled(const ToricBundle& bundle, int cone, const GroundSet& ground,
                                       std::mt19937_64& rng);

}  // namespace tvb
