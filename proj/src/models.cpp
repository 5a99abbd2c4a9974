#include "tvb/models.hpp"

#include <algorithm>
#include <map>

namespace tvb {

Fan projective_line_fan() {
    Fan f;
    f.lattice_rank = 1;
    f.rays = {{1}, {-1}};
    f.max_cones = {{0}, {1}};
    return f;
}

Fan projective_plane_fan() {
    Fan f;
    f.lattice_rank = 2;
    f.rays = {{1, 0}, {0, 1}, {-1, -1}};
    f.max_cones = {{1, 2}, {0, 2}, {0, 1}};
    return f;
}

Fan projective_space_fan(int d) {
    if (d < 1) throw ValidationError("projective space dimension must be positive");
    Fan f;
    f.lattice_rank = d;
    for (int i = 0; i < d; i++) {
        IntVec e(d, 0);
        e[i] = 1;
        f.rays.push_back(std::move(e));
    }
    f.rays.push_back(IntVec(d, -1));
    for (int skip = d; skip >= 0; skip--) {
        std::vector<int> cone;
        for (int i = 0; i <= d; i++) {
            if (i != skip) cone.push_back(i);
        }
        f.max_cones.push_back(std::move(cone));
    }
    return f;
}

Fan hirzebruch_fan(long long a) {
    Fan f;
    f.lattice_rank = 2;
    f.rays = {{1, 0}, {0, 1}, {-1, a}, {0, -1}};
    f.max_cones = {{0, 1}, {1, 2}, {2, 3}, {0, 3}};
    return f;
}

Fan product_p1_p1_fan() {
    Fan f;
    f.lattice_rank = 2;
    f.rays = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    f.max_cones = {{0, 1}, {1, 2}, {2, 3}, {0, 3}};
    return f;
}

ToricBundle line_bundle(const Fan& fan, const std::vector<long long>& coeffs) {
    if (coeffs.size() != fan.rays.size()) {
        throw ValidationError("need one divisor coefficient per ray");
    }
    ToricBundle b;
    b.fan = fan;
    b.rank = 1;
    for (long long c : coeffs) {
        Filtration f;
        f.steps.push_back({c, Subspace::full(1)});
        b.filtrations.push_back(std::move(f));
    }
    return b;
}

ToricBundle direct_sum_line_bundles(const Fan& fan,
                                    const std::vector<std::vector<long long>>& coeffs) {
    const int r = static_cast<int>(coeffs.size());
    if (r == 0) throw ValidationError("need at least one summand");
    for (const auto& c : coeffs) {
        if (c.size() != fan.rays.size()) {
            throw ValidationError("need one divisor coefficient per ray in every summand");
        }
    }
    ToricBundle b;
    b.fan = fan;
    b.rank = r;
    for (size_t i = 0; i < fan.rays.size(); i++) {
        std::map<long long, QMat> by_value;  // coefficient -> basis vectors at that value
        for (int k = 0; k < r; k++) {
            QVec e(r, Rational(0));
            e[k] = 1;
            by_value[coeffs[k][i]].push_back(std::move(e));
        }
        Filtration f;
        QMat tail;  // summands still inside the filtration at the current value
        for (int k = 0; k < r; k++) {
            QVec e(r, Rational(0));
            e[k] = 1;
            tail.push_back(std::move(e));
        }
        for (auto it = by_value.begin(); it != by_value.end(); ++it) {
            f.steps.push_back({it->first, Subspace::span_of(tail, r)});
            for (const QVec& gone : it->second) {
                tail.erase(std::find(tail.begin(), tail.end(), gone));
            }
        }
        b.filtrations.push_back(std::move(f));
    }
    return b;
}

ToricBundle tangent_bundle(const Fan& fan) {
    const int d = fan.lattice_rank;
    ToricBundle b;
    b.fan = fan;
    b.rank = d;
    for (const IntVec& v : fan.rays) {
        Filtration f;
        f.steps.push_back({0, Subspace::full(d)});
        if (d > 1) f.steps.push_back({1, Subspace::span_of({to_qvec(v)}, d)});
        b.filtrations.push_back(std::move(f));
    }
    if (d == 1) {
        // Rank one: the span at 1 is the whole fibre, so the step merges.
        for (Filtration& f : b.filtrations) f.steps = {{1, Subspace::full(1)}};
    }
    return b;
}

ToricBundle cotangent_bundle(const Fan& fan) {
    const int d = fan.lattice_rank;
    ToricBundle b;
    b.fan = fan;
    b.rank = d;
    for (const IntVec& v : fan.rays) {
        Filtration f;
        f.steps.push_back({-1, Subspace::full(d)});
        const QMat perp = nullspace(QMat{to_qvec(v)});
        if (!perp.empty()) f.steps.push_back({0, Subspace::span_of(perp, d)});
        b.filtrations.push_back(std::move(f));
    }
    return b;
}

}  // namespace tvb
