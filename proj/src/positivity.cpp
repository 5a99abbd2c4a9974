#include "tvb/positivity.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace tvb {

bool is_globally_generated(const BundleAnalysis& a, GgWitness* witness) {
    const int cones = static_cast<int>(a.bundle.fan.max_cones.size());
    for (int k = 0; k < cones; k++) {
        for (const CharacterCount& cc : a.characters[k]) {
            const auto [e_u, e_above] = cone_subspaces(a.bundle, k, cc.u);
            std::vector<QVec> reaching;
            for (const ParliamentPolytope& p : a.parliament) {
                if (p.contains(cc.u)) reaching.push_back(p.e);
            }
            Subspace covered = e_above;
            QMat rows = e_above.basis();
            for (const QVec& v : reaching) rows.push_back(v);
            covered = Subspace::span_of(std::move(rows), a.bundle.rank);
            if (covered.dim() < e_u.dim()) {
                if (witness) {
                    witness->cone = k;
                    witness->u = cc.u;
                    witness->missing_direction = complement_in(e_u, covered).front();
                }
                return false;
            }
        }
    }
    return true;
}

bool separates_k_jets(const BundleAnalysis& a, long long k, JetWitness* witness) {
    if (k < 0) throw ValidationError("jet order must be nonnegative");
    const int cones = static_cast<int>(a.bundle.fan.max_cones.size());
    for (int c = 0; c < cones; c++) {
        const ConeSplitting& split = a.splittings[c];
        const std::vector<IntVec> duals = dual_generators(a.bundle.fan, c);
        for (size_t idx = 0; idx < split.entries.size(); idx++) {
            if (jet_simplex_contained(a.bundle, split, a.parliament, static_cast<int>(idx), k)) {
                continue;
            }
            if (witness) {
                const SplitEntry& entry = split.entries[idx];
                const ParliamentPolytope& p = a.parliament[entry.ground_index];
                witness->cone = c;
                witness->entry_index = static_cast<int>(idx);
                witness->u = entry.u;
                witness->outside_point = entry.u;
                if (p.contains(entry.u)) {
                    for (const IntVec& w : duals) {
                        IntVec shifted = entry.u;
                        for (size_t j = 0; j < shifted.size(); j++) shifted[j] -= k * w[j];
                        if (!p.contains(shifted)) {
                            witness->outside_point = shifted;
                            break;
                        }
                    }
                }
            }
            return false;
        }
    }
    return true;
}

namespace {

// Multi-indices m in N^d with |m| <= k, lexicographic.
std::vector<IntVec> shifts_up_to(int d, long long k) {
    std::vector<IntVec> out;
    IntVec m(d, 0);
    std::function<void(int, long long)> rec = [&](int pos, long long left) {
        if (pos == d) {
            out.push_back(m);
            return;
        }
        for (long long x = 0; x <= left; x++) {
            m[pos] = x;
            rec(pos + 1, left - x);
        }
        m[pos] = 0;
    };
    rec(0, k);
    std::sort(out.begin(), out.end(), [](const IntVec& x, const IntVec& y) { return lex_less(x, y); });
    return out;
}

}  // namespace

bool jet_rank_oracle(const BundleAnalysis& a, int cone, long long k,
                     std::pair<IntVec, IntVec>* failure) {
    if (k < 0) throw ValidationError("jet order must be nonnegative");
    const ConeSplitting& split = a.splittings.at(cone);
    const std::vector<IntVec> duals = dual_generators(a.bundle.fan, cone);
    const int d = a.bundle.fan.lattice_rank;
    QMat basis_rows;
    for (const SplitEntry& e : split.entries) basis_rows.push_back(e.vector);

    std::vector<IntVec> distinct;
    for (const SplitEntry& e : split.entries) {
        if (distinct.empty() || !(distinct.back() == e.u)) distinct.push_back(e.u);
    }
    std::sort(distinct.begin(), distinct.end(), [](const IntVec& x, const IntVec& y) { return lex_less(x, y); });
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

    for (const IntVec& u : distinct) {
        std::vector<int> block;
        for (size_t i = 0; i < split.entries.size(); i++) {
            if (split.entries[i].u == u) block.push_back(static_cast<int>(i));
        }
        for (const IntVec& m : shifts_up_to(d, k)) {
            IntVec target = u;
            for (int j = 0; j < d; j++) {
                for (int t = 0; t < d; t++) target[t] -= m[j] * duals[j][t];
            }
            QMat projected;
            for (const ParliamentPolytope& p : a.parliament) {
                if (!p.contains(target)) continue;
                const auto coords = coordinates_in(basis_rows, p.e);
                if (!coords) throw InternalError("jet_rank_oracle: section outside the fibre");
                QVec slice;
                for (int b : block) slice.push_back((*coords)[b]);
                projected.push_back(std::move(slice));
            }
            const int rank = static_cast<int>(projected.size()) ? rref(projected) : 0;
            if (rank < static_cast<int>(block.size())) {
                if (failure) *failure = {u, m};
                return false;
            }
        }
    }
    return true;
}

namespace {

IntVec class_of(const IntVec& u, const Fan& fan, const std::vector<int>& wall_rays) {
    IntVec c;
    c.reserve(wall_rays.size());
    for (int t : wall_rays) c.push_back(dot(u, fan.rays[t]));
    return c;
}

// Characters of one side of the wall, expanded with multiplicity.
std::vector<IntVec> expanded_chars(const std::vector<CharacterCount>& chars) {
    std::vector<IntVec> out;
    for (const CharacterCount& cc : chars) {
        for (int i = 0; i < cc.multiplicity; i++) out.push_back(cc.u);
    }
    return out;
}

}  // namespace

CurveSplitting restrict_to_curve(const BundleAnalysis& a, const Wall& wall,
                                 const std::vector<long long>* v0_coefficients) {
    const Fan& fan = a.bundle.fan;
    const int d = fan.lattice_rank;
    const int left = wall.left_cone;
    const int right = wall.right_cone;
    const std::vector<IntVec> left_chars = expanded_chars(a.characters[left]);
    const std::vector<IntVec> right_chars = expanded_chars(a.characters[right]);

    std::map<IntVec, int> class_mult;
    for (const IntVec& u : left_chars) class_mult[class_of(u, fan, wall.ray_indices)]++;
    {
        std::map<IntVec, int> right_mult;
        for (const IntVec& u : right_chars) right_mult[class_of(u, fan, wall.ray_indices)]++;
        if (right_mult != class_mult) {
            throw InternalError("wall sides disagree on character classes");
        }
    }

    // A separating vector: positive combination of the wall's rays giving
    // every class a distinct pairing value.
    std::vector<long long> coeffs;
    const int nw = static_cast<int>(wall.ray_indices.size());
    auto values_distinct = [&](const std::vector<long long>& cs) {
        std::set<long long> vals;
        for (const auto& [cls, mult] : class_mult) {
            long long v = 0;
            for (int t = 0; t < nw; t++) v += cs[t] * cls[t];
            if (!vals.insert(v).second) return false;
        }
        return true;
    };
    if (v0_coefficients) {
        if (static_cast<int>(v0_coefficients->size()) != nw ||
            std::any_of(v0_coefficients->begin(), v0_coefficients->end(),
                        [](long long c) { return c <= 0; })) {
            throw ValidationError("separating vector coefficients must be positive, one per wall ray");
        }
        if (!values_distinct(*v0_coefficients)) {
            throw ValidationError("separating vector does not distinguish the character classes");
        }
        coeffs = *v0_coefficients;
    } else if (nw == 0) {
        coeffs = {};
    } else {
        bool found = false;
        for (long long total = nw; total <= nw + 200 && !found; total++) {
            std::vector<long long> cs(nw, 1);
            std::function<void(int, long long)> rec = [&](int pos, long long left_over) {
                if (found) return;
                if (pos == nw - 1) {
                    cs[pos] = left_over;
                    if (values_distinct(cs)) {
                        coeffs = cs;
                        found = true;
                    }
                    return;
                }
                for (long long x = 1; x <= left_over - (nw - 1 - pos); x++) {
                    cs[pos] = x;
                    rec(pos + 1, left_over - x);
                }
            };
            rec(0, total);
        }
        if (!found) throw InternalError("no separating vector found for wall");
    }

    auto class_value = [&](const IntVec& cls) {
        long long v = 0;
        for (int t = 0; t < nw; t++) v += coeffs[t] * cls[t];
        return v;
    };

    // Filtration along the separating direction, assembled from the left
    // cone's weight spaces; both sides give the same subspaces.
    std::map<long long, Subspace> by_value;  // value -> sum of E_u over classes at that value
    for (const auto& [cls, mult] : class_mult) {
        Subspace s = Subspace::zero(a.bundle.rank);
        for (const CharacterCount& cc : a.characters[left]) {
            if (class_of(cc.u, fan, wall.ray_indices) == cls) {
                s = sum(s, cone_subspaces(a.bundle, left, cc.u).first);
            }
        }
        by_value.emplace(class_value(cls), s);
    }
    auto filtration_from = [&](long long j) {
        Subspace s = Subspace::zero(a.bundle.rank);
        for (const auto& [val, sub] : by_value) {
            if (val >= j) s = sum(s, sub);
        }
        return s;
    };

    const Filtration& left_filt = a.bundle.filtrations[wall.left_extra_ray];
    const Filtration& right_filt = a.bundle.filtrations[wall.right_extra_ray];
    const std::vector<IntVec> left_duals = dual_generators(fan, left);
    const std::vector<IntVec> right_duals = dual_generators(fan, right);
    const std::vector<int>& left_cone_rays = fan.max_cones[left];
    const std::vector<int>& right_cone_rays = fan.max_cones[right];

    auto build_character = [&](const std::vector<int>& cone_rays, const std::vector<IntVec>& duals,
                               const IntVec& cls, int extra_ray, long long extra_value) {
        IntVec u(d, 0);
        for (size_t pos = 0; pos < cone_rays.size(); pos++) {
            long long value;
            if (cone_rays[pos] == extra_ray) {
                value = extra_value;
            } else {
                const auto it =
                    std::find(wall.ray_indices.begin(), wall.ray_indices.end(), cone_rays[pos]);
                if (it == wall.ray_indices.end()) {
                    throw InternalError("cone ray missing from wall");
                }
                value = cls[it - wall.ray_indices.begin()];
            }
            for (int t = 0; t < d; t++) u[t] += value * duals[pos][t];
        }
        return u;
    };

    CurveSplitting out;
    out.wall = wall;
    out.v0_coefficients = coeffs;

    std::vector<IntVec> classes;
    for (const auto& [cls, mult] : class_mult) classes.push_back(cls);
    std::sort(classes.begin(), classes.end(), [](const IntVec& x, const IntVec& y) { return lex_less(x, y); });

    for (const IntVec& cls : classes) {
        const long long val = class_value(cls);
        const Subspace full_at = filtration_from(val);
        const Subspace quot = filtration_from(val + 1);
        auto graded_dim = [&](long long i, long long j) {
            const Subspace ai = sum(intersect(left_filt.value_at(i), full_at), quot);
            const Subspace bj = sum(intersect(right_filt.value_at(j), full_at), quot);
            return intersect(ai, bj).dim() - quot.dim();
        };
        int produced = 0;
        for (long long i : left_filt.jumps()) {
            for (long long j : right_filt.jumps()) {
                const int m = graded_dim(i, j) - graded_dim(i + 1, j) - graded_dim(i, j + 1) +
                              graded_dim(i + 1, j + 1);
                if (m == 0) continue;
                if (m < 0) throw InternalError("curve restriction produced a negative multiplicity");
                const IntVec u_left = build_character(left_cone_rays, left_duals, cls,
                                                      wall.left_extra_ray, i);
                const IntVec u_right = build_character(right_cone_rays, right_duals, cls,
                                                       wall.right_extra_ray, j);
                const long long degree = dot(u_left, wall.v_tau) - dot(u_right, wall.v_tau);
                for (int t = 0; t < d; t++) {
                    if (u_left[t] - u_right[t] != degree * wall.m_tau[t]) {
                        throw InternalError("curve pair does not differ by a multiple of the wall form");
                    }
                }
                for (int copy = 0; copy < m; copy++) out.pairs.push_back({u_left, u_right, degree});
                produced += m;
            }
        }
        if (produced != class_mult[cls]) {
            throw InternalError("curve restriction lost a summand in class " + format_vector(cls));
        }
    }

    // Both sides of every pair must reproduce the cones' characters exactly.
    {
        std::multiset<IntVec> lhs, rhs;
        for (const CurvePair& p : out.pairs) {
            lhs.insert(p.u_left);
            rhs.insert(p.u_right);
        }
        std::multiset<IntVec> expect_left(left_chars.begin(), left_chars.end());
        std::multiset<IntVec> expect_right(right_chars.begin(), right_chars.end());
        if (lhs != expect_left || rhs != expect_right) {
            throw InternalError("curve restriction does not match the wall cones' characters");
        }
    }

    std::sort(out.pairs.begin(), out.pairs.end(), [](const CurvePair& x, const CurvePair& y) {
        if (x.degree != y.degree) return x.degree > y.degree;
        if (!(x.u_left == y.u_left)) return lex_less(x.u_left, y.u_left);
        return lex_less(x.u_right, y.u_right);
    });
    return out;
}

AmpleNef is_ample_nef(const BundleAnalysis& a) {
    AmpleNef out;
    out.ample = true;
    out.nef = true;
    for (const Wall& w : a.fan_walls) {
        const CurveSplitting cs = restrict_to_curve(a, w);
        for (const CurvePair& p : cs.pairs) {
            if (p.degree <= 0) out.ample = false;
            if (p.degree < 0) out.nef = false;
        }
    }
    return out;
}

PositivityReport positivity_report(const BundleAnalysis& a, const std::vector<long long>& jet_orders) {
    PositivityReport r;
    GgWitness gg;
    r.globally_generated = is_globally_generated(a, &gg);
    if (!r.globally_generated) r.gg_witness = gg;

    std::set<long long> orders(jet_orders.begin(), jet_orders.end());
    orders.insert(0);
    orders.insert(1);
    for (long long k : orders) {
        JetWitness w;
        const bool ok = separates_k_jets(a, k, &w);
        r.k_jet_ample[k] = ok;
        if (!ok) r.jet_witnesses[k] = w;
    }
    r.very_ample = r.k_jet_ample.at(1);
    const AmpleNef an = is_ample_nef(a);
    r.ample = an.ample;
    r.nef = an.nef;
    r.splits_into_line_bundles = splits_equivariantly(a.ground, a.bundle.rank);
    for (const Wall& w : a.fan_walls) r.restrictions.push_back(restrict_to_curve(a, w));
    return r;
}

}  // namespace tvb
