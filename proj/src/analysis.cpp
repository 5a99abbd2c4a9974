#include "tvb/analysis.hpp"

namespace tvb {

BundleAnalysis analyze(ToricBundle bundle) {
    require_valid(bundle.fan);
    validate_bundle_structure(bundle);
    BundleAnalysis a;
    a.bundle = std::move(bundle);
    a.lattice = intersection_lattice(a.bundle);
    a.ground = ground_set(a.lattice);
    a.parliament = build_parliament(a.bundle, a.ground);
    const int cones = static_cast<int>(a.bundle.fan.max_cones.size());
    for (int k = 0; k < cones; k++) {
        a.characters.push_back(cone_characters(a.bundle, k));
        a.splittings.push_back(splitting_basis(a.bundle, k, a.ground));
    }
    a.fan_walls = walls(a.bundle.fan);
    a.sections = global_sections(a.bundle, a.parliament);
    return a;
}

}  // namespace tvb
