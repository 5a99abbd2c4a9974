#include "tvb/fan.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace tvb {

namespace {

bool is_primitive(const IntVec& v) {
    long long g = 0;
    for (long long x : v) g = std::gcd(g, x);
    return g == 1;
}

QMat ray_matrix(const Fan& fan, const std::vector<int>& ray_indices) {
    QMat m;
    for (int i : ray_indices) m.push_back(to_qvec(fan.rays[i]));
    return m;
}

// Extreme-ray enumeration for {x : <x, v_i> <= 0 for all rays}; the fan's
// support covers the whole space exactly when that cone is trivial.
bool rays_positively_span(const Fan& fan) {
    const int d = fan.lattice_rank;
    const int n = static_cast<int>(fan.rays.size());
    QMat all = ray_matrix(fan, [&] {
        std::vector<int> idx(n);
        std::iota(idx.begin(), idx.end(), 0);
        return idx;
    }());
    {
        QMat copy = all;
        if (rref(copy) < d) return false;
    }
    if (d == 1) {
        bool pos = false, neg = false;
        for (const IntVec& v : fan.rays) {
            if (v[0] > 0) pos = true;
            if (v[0] < 0) neg = true;
        }
        return pos && neg;
    }
    // Iterate over (d-1)-subsets of ray indices.
    std::vector<int> c(d - 1);
    std::iota(c.begin(), c.end(), 0);
    while (true) {
        QMat m = ray_matrix(fan, c);
        QMat kernel = nullspace(m);
        if (kernel.size() == 1) {
            for (int sign : {1, -1}) {
                bool inside = true;
                for (const IntVec& v : fan.rays) {
                    Rational val = dot(kernel[0], v) * sign;
                    if (val > 0) {
                        inside = false;
                        break;
                    }
                }
                if (inside) return false;
            }
        }
        int i = d - 2;
        while (i >= 0 && c[i] == n - (d - 1) + i) i--;
        if (i < 0) break;
        c[i]++;
        for (int j = i + 1; j < d - 1; j++) c[j] = c[j - 1] + 1;
    }
    return true;
}

}  // namespace

FanValidation validate(const Fan& fan) {
    FanValidation out;
    const int d = fan.lattice_rank;
    if (d < 1) {
        out.problems.push_back("lattice rank must be at least 1");
        return out;
    }
    bool structural_ok = true;
    std::set<IntVec> seen_rays;
    for (size_t i = 0; i < fan.rays.size(); i++) {
        const IntVec& v = fan.rays[i];
        std::ostringstream tag;
        tag << "ray " << (i + 1);
        if (static_cast<int>(v.size()) != d) {
            out.problems.push_back(tag.str() + " has wrong length");
            structural_ok = false;
            continue;
        }
        if (std::all_of(v.begin(), v.end(), [](long long x) { return x == 0; })) {
            out.problems.push_back(tag.str() + " is zero");
            structural_ok = false;
        } else if (!is_primitive(v)) {
            out.problems.push_back(tag.str() + " is not primitive");
            structural_ok = false;
        }
        if (!seen_rays.insert(v).second) {
            out.problems.push_back(tag.str() + " duplicates another ray");
            structural_ok = false;
        }
    }
    std::set<std::vector<int>> seen_cones;
    for (size_t k = 0; k < fan.max_cones.size(); k++) {
        std::ostringstream tag;
        tag << "cone " << (k + 1);
        const auto& cone = fan.max_cones[k];
        if (static_cast<int>(cone.size()) != d) {
            out.problems.push_back(tag.str() + " does not have exactly " + std::to_string(d) + " rays");
            structural_ok = false;
            continue;
        }
        std::set<int> uniq;
        bool in_range = true;
        for (int r : cone) {
            if (r < 0 || r >= static_cast<int>(fan.rays.size())) {
                out.problems.push_back(tag.str() + " references a ray that does not exist");
                structural_ok = false;
                in_range = false;
                break;
            }
            uniq.insert(r);
        }
        if (!in_range) continue;
        if (static_cast<int>(uniq.size()) != d) {
            out.problems.push_back(tag.str() + " repeats a ray");
            structural_ok = false;
            continue;
        }
        std::vector<int> key(uniq.begin(), uniq.end());
        if (!seen_cones.insert(key).second) {
            out.problems.push_back(tag.str() + " duplicates another cone");
            structural_ok = false;
        }
    }
    if (fan.max_cones.empty()) {
        out.problems.push_back("fan has no maximal cones");
        structural_ok = false;
    }
    if (!structural_ok) return out;

    out.smooth = true;
    for (size_t k = 0; k < fan.max_cones.size(); k++) {
        const Rational det = determinant(ray_matrix(fan, fan.max_cones[k]));
        if (det != 1 && det != -1) {
            out.smooth = false;
            std::ostringstream os;
            os << "cone " << (k + 1) << " is not unimodular (determinant " << rational_to_string(det) << ")";
            out.problems.push_back(os.str());
        }
    }

    out.complete = true;
    std::map<std::vector<int>, std::vector<std::pair<int, int>>> facets;  // facet -> (cone, extra ray)
    for (size_t k = 0; k < fan.max_cones.size(); k++) {
        std::vector<int> cone = fan.max_cones[k];
        std::sort(cone.begin(), cone.end());
        for (int drop = 0; drop < d; drop++) {
            std::vector<int> facet;
            for (int j = 0; j < d; j++) {
                if (j != drop) facet.push_back(cone[j]);
            }
            facets[facet].emplace_back(static_cast<int>(k), cone[drop]);
        }
    }
    for (const auto& [facet, owners] : facets) {
        if (owners.size() != 2) {
            out.complete = false;
            std::ostringstream os;
            os << "wall {";
            for (size_t i = 0; i < facet.size(); i++) {
                if (i) os << ", ";
                os << "ray " << (facet[i] + 1);
            }
            os << "} belongs to " << owners.size() << " maximal cones instead of 2";
            out.problems.push_back(os.str());
            continue;
        }
        // The two cones must lie on opposite sides of the wall's hyperplane.
        QMat m0;
        if (facet.empty()) {
            m0 = {QVec{Rational(1)}};
        } else {
            m0 = nullspace(ray_matrix(fan, facet));
        }
        if (m0.size() != 1) {
            out.complete = false;
            out.problems.push_back("wall rays are linearly dependent");
            continue;
        }
        const Rational a = dot(m0[0], fan.rays[owners[0].second]);
        const Rational b = dot(m0[0], fan.rays[owners[1].second]);
        if (a == 0 || b == 0 || (a > 0) == (b > 0)) {
            out.complete = false;
            std::ostringstream os;
            os << "cones " << (owners[0].first + 1) << " and " << (owners[1].first + 1)
               << " do not lie on opposite sides of their shared wall";
            out.problems.push_back(os.str());
        }
    }
    // Connectivity over shared walls.
    if (out.complete && fan.max_cones.size() > 1) {
        std::vector<std::vector<int>> adj(fan.max_cones.size());
        for (const auto& [facet, owners] : facets) {
            adj[owners[0].first].push_back(owners[1].first);
            adj[owners[1].first].push_back(owners[0].first);
        }
        std::vector<bool> seen(fan.max_cones.size(), false);
        std::vector<int> stack{0};
        seen[0] = true;
        while (!stack.empty()) {
            int k = stack.back();
            stack.pop_back();
            for (int j : adj[k]) {
                if (!seen[j]) {
                    seen[j] = true;
                    stack.push_back(j);
                }
            }
        }
        if (!std::all_of(seen.begin(), seen.end(), [](bool s) { return s; })) {
            out.complete = false;
            out.problems.push_back("maximal cones are not connected through walls");
        }
    }
    if (out.complete && !rays_positively_span(fan)) {
        out.complete = false;
        out.problems.push_back("rays do not positively span the whole space");
    }
    return out;
}

void require_valid(const Fan& fan) {
    const FanValidation v = validate(fan);
    if (v.ok()) return;
    std::ostringstream os;
    os << "invalid fan:";
    for (const std::string& p : v.problems) os << " " << p << ";";
    if (v.problems.empty()) os << " not smooth or not complete";
    throw ValidationError(os.str());
}

std::vector<IntVec> dual_generators(const Fan& fan, int cone_index) {
    if (cone_index < 0 || cone_index >= static_cast<int>(fan.max_cones.size())) {
        throw InternalError("dual_generators: cone index out of range");
    }
    const int d = fan.lattice_rank;
    const QMat v = ray_matrix(fan, fan.max_cones[cone_index]);
    std::vector<IntVec> out;
    for (int j = 0; j < d; j++) {
        QVec e(d, Rational(0));
        e[j] = 1;
        auto x = solve_square(v, e);
        if (!x) throw InternalError("dual_generators: cone matrix is singular");
        IntVec w(d);
        for (int k = 0; k < d; k++) w[k] = to_int64((*x)[k]);
        out.push_back(std::move(w));
    }
    return out;
}

std::vector<Wall> walls(const Fan& fan) {
    const int d = fan.lattice_rank;
    std::map<std::vector<int>, std::vector<std::pair<int, int>>> facets;
    for (size_t k = 0; k < fan.max_cones.size(); k++) {
        std::vector<int> cone = fan.max_cones[k];
        std::sort(cone.begin(), cone.end());
        for (int drop = 0; drop < d; drop++) {
            std::vector<int> facet;
            for (int j = 0; j < d; j++) {
                if (j != drop) facet.push_back(cone[j]);
            }
            facets[facet].emplace_back(static_cast<int>(k), cone[drop]);
        }
    }
    std::vector<Wall> out;
    for (const auto& [facet, owners] : facets) {
        if (owners.size() != 2) throw ValidationError("fan wall is not two-sided");
        Wall w;
        w.ray_indices = facet;
        auto [c0, c1] = std::pair(owners[0], owners[1]);
        if (c1.first < c0.first) std::swap(c0, c1);
        w.left_cone = c0.first;
        w.right_cone = c1.first;
        w.left_extra_ray = c0.second;
        w.right_extra_ray = c1.second;
        QMat m0;
        if (facet.empty()) {
            m0 = {QVec{Rational(1)}};
        } else {
            m0 = nullspace(ray_matrix(fan, facet));
        }
        if (m0.size() != 1) throw ValidationError("fan wall rays are linearly dependent");
        QVec m = m0[0];
        Rational left_val = dot(m, fan.rays[w.left_extra_ray]);
        if (left_val < 0) {
            for (Rational& x : m) x = -x;
            left_val = -left_val;
        }
        if (left_val != 1 || dot(m, fan.rays[w.right_extra_ray]) != -1) {
            throw InternalError("wall pairing is not unimodular; fan validation should have rejected this");
        }
        Wall& ww = out.emplace_back(std::move(w));
        ww.m_tau.resize(d);
        for (int j = 0; j < d; j++) ww.m_tau[j] = to_int64(m[j]);
        ww.v_tau = fan.rays[ww.left_extra_ray];
    }
    return out;
}

}  // namespace tvb
