#pragma once

#include "tvb/parliament.hpp"

namespace tvb {

// Everything derived from one bundle that downstream questions share:
// lattice, ground set, parliament, per-cone characters and splittings,
// fan walls, and the table of global sections.
struct BundleAnalysis {
    ToricBundle bundle;
    IntersectionLattice lattice;
    GroundSet ground;
    std::vector<ParliamentPolytope> parliament;
    std::vector<std::vector<CharacterCount>> characters;  // by maximal cone
    std::vector<ConeSplitting> splittings;                // by maximal cone
    std::vector<Wall> fan_walls;
    SectionsTable sections;
};

// Validates the fan and the filtration shape, then computes the shared data.
// Throws ValidationError on structural problems and IncompatibleFiltrations
// when some maximal cone admits no equivariant splitting.
BundleAnalysis analyze(ToricBundle bundle);

}  // namespace tvb
