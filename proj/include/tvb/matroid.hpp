#pragma once

#include <random>
#include <vector>

#include "tvb/bundle.hpp"

namespace tvb {

// All intersections of filtration subspaces, closed under pairwise
// intersection, sorted by dimension and then lexicographically.
struct IntersectionLattice {
    int ambient = 0;
    std::vector<Subspace> members;

    int index_of(const Subspace& s) const;
};

IntersectionLattice intersection_lattice(const ToricBundle& bundle);

// Vectors obtained by freely expanding the lattice: each member contributes
// a complement, inside itself, of the span of the members strictly below it.
// `flats[m]` lists the vector indices lying in lattice member m.
struct GroundSet {
    std::vector<QVec> vectors;  // primitive integer entries, sorted lexicographically
    std::vector<std::vector<int>> flats;
};

GroundSet ground_set(const IntersectionLattice& lattice);

// Same expansion but with random representatives; used to confirm that
// downstream answers do not depend on the choice.
GroundSet ground_set_shuffled(const IntersectionLattice& lattice, std::mt19937_64& rng);

}  // namespace tvb
