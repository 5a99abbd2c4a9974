#include "tvb/parliament.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace tvb {

bool ParliamentPolytope::contains(const IntVec& u) const {
    for (size_t i = 0; i < rays.size(); i++) {
        if (dot(rays[i], u) > bounds[i]) return false;
    }
    return true;
}

bool ParliamentPolytope::contains(const QVec& u) const {
    for (size_t i = 0; i < rays.size(); i++) {
        if (dot(u, rays[i]) > static_cast<long>(bounds[i])) return false;
    }
    return true;
}

ParliamentPolytope polytope(const ToricBundle& bundle, const QVec& e, int ground_index) {
    const int d = bundle.fan.lattice_rank;
    const int n = static_cast<int>(bundle.fan.rays.size());
    ParliamentPolytope p;
    p.ground_index = ground_index;
    p.e = e;
    p.rays = bundle.fan.rays;
    for (int i = 0; i < n; i++) {
        p.bounds.push_back(bundle.filtrations[i].filtration_value(e));
    }
    // Vertex candidates: intersections of d of the bounding hyperplanes.
    // Completeness of the fan keeps the region bounded, so feasible candidate
    // vertices exist exactly when the region is nonempty.
    std::set<QVec> seen;
    std::vector<int> c(d);
    for (int i = 0; i < d; i++) c[i] = i;
    while (true) {
        QMat m;
        QVec rhs;
        for (int i : c) {
            m.push_back(to_qvec(bundle.fan.rays[i]));
            rhs.emplace_back(static_cast<long>(p.bounds[i]));
        }
        if (auto x = solve_square(m, rhs)) {
            if (p.contains(*x) && seen.insert(*x).second) p.vertices.push_back(*x);
        }
        int i = d - 1;
        while (i >= 0 && c[i] == n - d + i) i--;
        if (i < 0) break;
        c[i]++;
        for (int j = i + 1; j < d; j++) c[j] = c[j - 1] + 1;
    }
    std::sort(p.vertices.begin(), p.vertices.end(), [](const QVec& a, const QVec& b) { return lex_less(a, b); });
    p.is_empty = p.vertices.empty();
    if (p.is_empty) return p;

    std::vector<long long> lo(d), hi(d);
    for (int j = 0; j < d; j++) {
        Rational mn = p.vertices[0][j], mx = p.vertices[0][j];
        for (const QVec& v : p.vertices) {
            mn = std::min(mn, v[j]);
            mx = std::max(mx, v[j]);
        }
        lo[j] = ceil_of(mn);
        hi[j] = floor_of(mx);
    }
    IntVec u(d);
    std::function<void(int)> scan = [&](int coord) {
        if (coord == d) {
            if (p.contains(u)) p.lattice_points.push_back(u);
            return;
        }
        for (long long x = lo[coord]; x <= hi[coord]; x++) {
            u[coord] = x;
            scan(coord + 1);
        }
    };
    scan(0);
    std::sort(p.lattice_points.begin(), p.lattice_points.end(),
              [](const IntVec& a, const IntVec& b) { return lex_less(a, b); });
    return p;
}

std::vector<ParliamentPolytope> build_parliament(const ToricBundle& bundle, const GroundSet& ground) {
    std::vector<ParliamentPolytope> out;
    out.reserve(ground.vectors.size());
    for (size_t i = 0; i < ground.vectors.size(); i++) {
        out.push_back(polytope(bundle, ground.vectors[i], static_cast<int>(i)));
    }
    return out;
}

SectionsTable global_sections(const ToricBundle& bundle,
                              const std::vector<ParliamentPolytope>& parliament) {
    std::set<IntVec> points;
    for (const ParliamentPolytope& p : parliament) {
        points.insert(p.lattice_points.begin(), p.lattice_points.end());
    }
    SectionsTable table;
    for (const IntVec& u : points) {
        Subspace w = Subspace::full(bundle.rank);
        for (size_t i = 0; i < bundle.fan.rays.size(); i++) {
            w = intersect(w, bundle.filtrations[i].value_at(dot(u, bundle.fan.rays[i])));
        }
        if (w.dim() == 0) {
            throw InternalError("parliament point " + format_vector(u) + " carries no sections");
        }
        table.entries.push_back({u, w.dim()});
        table.h0 += w.dim();
    }
    std::sort(table.entries.begin(), table.entries.end(),
              [](const SectionEntry& a, const SectionEntry& b) { return lex_less(a.u, b.u); });
    return table;
}

bool jet_simplex_contained(const ToricBundle& bundle, const ConeSplitting& splitting,
                           const std::vector<ParliamentPolytope>& parliament, int entry_index,
                           long long k) {
    if (k < 0) throw ValidationError("jet order must be nonnegative");
    const SplitEntry& entry = splitting.entries.at(entry_index);
    if (entry.ground_index < 0 || entry.ground_index >= static_cast<int>(parliament.size())) {
        throw InternalError("jet_simplex_contained: splitting entry has no parliament polytope");
    }
    const ParliamentPolytope& p = parliament[entry.ground_index];
    if (!p.contains(entry.u)) return false;
    const std::vector<IntVec> duals = dual_generators(bundle.fan, splitting.cone);
    for (const IntVec& w : duals) {
        IntVec shifted = entry.u;
        for (size_t j = 0; j < shifted.size(); j++) shifted[j] -= k * w[j];
        if (!p.contains(shifted)) return false;
    }
    return true;
}

bool splits_equivariantly(const GroundSet& ground, int rank) {
    return static_cast<int>(ground.vectors.size()) == rank;
}

}  // namespace tvb
