#pragma once

#include "tvb/bundle.hpp"

namespace tvb {

Fan projective_line_fan();
Fan projective_plane_fan();
Fan projective_space_fan(int d);
Fan hirzebruch_fan(long long a = 1);
Fan product_p1_p1_fan();

// Invariant divisor sum(coeffs[i] * D_i): decreasing filtrations holding the
// whole fibre through coeffs[i] on ray i.
ToricBundle line_bundle(const Fan& fan, const std::vector<long long>& coeffs);

ToricBundle direct_sum_line_bundles(const Fan& fan, const std::vector<std::vector<long long>>& coeffs);

// Rank-d bundle whose filtration on each ray drops to the ray's own direction
// at value 1.
ToricBundle tangent_bundle(const Fan& fan);

// Dual: the filtration drops at 0 to the hyperplane annihilating the ray.
ToricBundle cotangent_bundle(const Fan& fan);

}  // namespace tvb
