#pragma once

#include <string>
#include <vector>

#include "tvb/subspace.hpp"

namespace tvb {

// A complete simplicial fan given by primitive ray generators and maximal
// cones listed as ray-index sets (0-based internally).
struct Fan {
    int lattice_rank = 0;
    std::vector<IntVec> rays;
    std::vector<std::vector<int>> max_cones;
};

struct FanValidation {
    bool smooth = false;
    bool complete = false;
    std::vector<std::string> problems;
    bool ok() const { return smooth && complete && problems.empty(); }
};

FanValidation validate(const Fan& fan);

// Throws ValidationError listing every problem when the fan is not a smooth
// complete unimodular fan.
void require_valid(const Fan& fan);

// Rows w_1..w_d with <w_j, v_i> = delta_ij over the rays of the cone; integer
// because the cone is unimodular.
std::vector<IntVec> dual_generators(const Fan& fan, int cone_index);

// A codimension-one cone shared by two maximal cones. The side with the
// smaller maximal-cone index is called left. m_tau vanishes on the wall's
// rays and takes value +1 on the left cone's remaining ray; v_tau is that
// remaining ray of the left cone.
struct Wall {
    std::vector<int> ray_indices;  // sorted, size d-1
    int left_cone = -1;
    int right_cone = -1;
    int left_extra_ray = -1;
    int right_extra_ray = -1;
    IntVec m_tau;
    IntVec v_tau;
};

// All walls, sorted by ray_indices. Requires a valid fan.
std::vector<Wall> walls(const Fan& fan);

}  // namespace tvb
