#pragma once

#include <vector>

#include "tvb/splitting.hpp"

namespace tvb {

// The polytope attached to one ground-set vector: all characters u with
// <u, v_i> bounded by the vector's filtration value on every ray.
struct ParliamentPolytope {
    int ground_index = -1;
    QVec e;
    std::vector<IntVec> rays;        // copy of the fan's rays, aligned with bounds
    std::vector<long long> bounds;   // <u, rays[i]> <= bounds[i]
    std::vector<QVec> vertices;      // sorted lexicographically
    std::vector<IntVec> lattice_points;
    bool is_empty = true;

    bool contains(const IntVec& u) const;
    bool contains(const QVec& u) const;
};

ParliamentPolytope polytope(const ToricBundle& bundle, const QVec& e, int ground_index = -1);

// One polytope per ground-set vector, aligned with ground indices.
std::vector<ParliamentPolytope> build_parliament(const ToricBundle& bundle, const GroundSet& ground);

struct SectionEntry {
    IntVec u;
    int dim = 0;  // dimension of the weight space
};

// Weight spaces of the space of global sections: the characters are the
// lattice points of the parliament, each contributing the intersection of
// all filtrations at its pairing values.
struct SectionsTable {
    std::vector<SectionEntry> entries;  // sorted lexicographically by u
    long long h0 = 0;
};

SectionsTable global_sections(const ToricBundle& bundle,
                              const std::vector<ParliamentPolytope>& parliament);

// Whether the entry's character together with its k-fold shifts along the
// cone's dual generators stays inside the entry's polytope.
bool jet_simplex_contained(const ToricBundle& bundle, const ConeSplitting& splitting,
                           const std::vector<ParliamentPolytope>& parliament, int entry_index,
                           long long k);

// The bundle is a direct sum of line bundles exactly when the ground set is
// no bigger than the rank.
bool splits_equivariantly(const GroundSet& ground, int rank);

}  // namespace tvb
