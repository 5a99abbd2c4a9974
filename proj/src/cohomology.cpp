#include "tvb/cohomology.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "tvb/splitting.hpp"

namespace tvb {

namespace {

struct CoverPattern {
    std::vector<std::vector<int>> subsets;          // all nonempty subsets, by size then lex
    std::vector<std::vector<int>> shared_rays;      // rays common to the subset's cones
    std::vector<std::vector<std::pair<int, int>>> maps;  // subset -> list of (target subset, sign)
    std::vector<int> degree_begin;                  // first subset index of each degree
};

CoverPattern cover_pattern(const Fan& fan) {
    const int t = static_cast<int>(fan.max_cones.size());
    CoverPattern pat;
    std::map<std::vector<int>, int> index_of;
    for (int size = 1; size <= t; size++) {
        pat.degree_begin.push_back(static_cast<int>(pat.subsets.size()));
        std::vector<int> c(size);
        for (int i = 0; i < size; i++) c[i] = i;
        while (true) {
            index_of.emplace(c, static_cast<int>(pat.subsets.size()));
            pat.subsets.push_back(c);
            int i = size - 1;
            while (i >= 0 && c[i] == t - size + i) i--;
            if (i < 0) break;
            c[i]++;
            for (int j = i + 1; j < size; j++) c[j] = c[j - 1] + 1;
        }
    }
    pat.degree_begin.push_back(static_cast<int>(pat.subsets.size()));
    for (const std::vector<int>& s : pat.subsets) {
        std::set<int> rays(fan.max_cones[s[0]].begin(), fan.max_cones[s[0]].end());
        for (size_t i = 1; i < s.size(); i++) {
            std::set<int> next;
            for (int r : fan.max_cones[s[i]]) {
                if (rays.count(r)) next.insert(r);
            }
            rays = std::move(next);
        }
        pat.shared_rays.emplace_back(rays.begin(), rays.end());
    }
    pat.maps.resize(pat.subsets.size());
    for (size_t si = 0; si < pat.subsets.size(); si++) {
        const std::vector<int>& s = pat.subsets[si];
        if (static_cast<int>(s.size()) == t) continue;
        for (int extra = 0; extra < t; extra++) {
            if (std::binary_search(s.begin(), s.end(), extra)) continue;
            std::vector<int> bigger = s;
            const auto pos = std::lower_bound(bigger.begin(), bigger.end(), extra);
            const int k = static_cast<int>(pos - bigger.begin());
            bigger.insert(pos, extra);
            pat.maps[si].emplace_back(index_of.at(bigger), (k % 2 == 0) ? 1 : -1);
        }
    }
    return pat;
}

std::vector<Subspace> pattern_terms(const ToricBundle& bundle, const CoverPattern& pat,
                                    const IntVec& u) {
    std::vector<Subspace> terms;
    terms.reserve(pat.subsets.size());
    for (const std::vector<int>& rays : pat.shared_rays) {
        Subspace s = Subspace::full(bundle.rank);
        for (int r : rays) {
            s = intersect(s, bundle.filtrations[r].value_at(dot(u, bundle.fan.rays[r])));
            if (s.is_zero()) break;
        }
        terms.push_back(std::move(s));
    }
    return terms;
}

std::vector<int> pattern_dims(const ToricBundle& bundle, const CoverPattern& pat,
                              const std::vector<Subspace>& terms) {
    const int degrees = static_cast<int>(pat.degree_begin.size()) - 1;
    const int r = bundle.rank;
    std::vector<int> chain_dim(degrees, 0);
    for (int p = 0; p < degrees; p++) {
        for (int si = pat.degree_begin[p]; si < pat.degree_begin[p + 1]; si++) {
            chain_dim[p] += terms[si].dim();
        }
    }
    std::vector<int> ranks(degrees, 0);  // rank of the map out of degree p
    for (int p = 0; p + 1 < degrees; p++) {
        // Columns of the differential in ambient coordinates of each target
        // block; ranks are unaffected by this embedding.
        const int target_blocks = pat.degree_begin[p + 2] - pat.degree_begin[p + 1];
        QMat columns;
        for (int si = pat.degree_begin[p]; si < pat.degree_begin[p + 1]; si++) {
            for (const QVec& b : terms[si].basis()) {
                QVec column(static_cast<size_t>(target_blocks) * r, Rational(0));
                for (const auto& [tj, sign] : pat.maps[si]) {
                    const int offset = (tj - pat.degree_begin[p + 1]) * r;
                    for (int x = 0; x < r; x++) column[offset + x] = sign * b[x];
                }
                columns.push_back(std::move(column));
            }
        }
        ranks[p] = rref(columns);
    }
    std::vector<int> dims(degrees, 0);
    for (int p = 0; p < degrees; p++) {
        dims[p] = chain_dim[p] - ranks[p] - (p > 0 ? ranks[p - 1] : 0);
        if (dims[p] < 0) throw InternalError("cohomology dimension came out negative");
    }
    return dims;
}

}  // namespace

CechComplex cech_complex(const ToricBundle& bundle, const IntVec& u) {
    if (static_cast<int>(u.size()) != bundle.fan.lattice_rank) {
        throw ValidationError("character has " + std::to_string(u.size()) +
                              " coordinates, the lattice rank is " +
                              std::to_string(bundle.fan.lattice_rank));
    }
    const CoverPattern pat = cover_pattern(bundle.fan);
    CechComplex out;
    out.u = u;
    out.subsets = pat.subsets;
    out.terms = pattern_terms(bundle, pat, u);
    out.dims = pattern_dims(bundle, pat, out.terms);
    return out;
}

std::vector<int> cohomology_at(const ToricBundle& bundle, const IntVec& u) {
    const CechComplex c = cech_complex(bundle, u);
    const int d = bundle.fan.lattice_rank;
    std::vector<int> out(d + 1, 0);
    for (size_t p = 0; p < c.dims.size(); p++) {
        if (static_cast<int>(p) <= d) {
            out[p] = c.dims[p];
        } else if (c.dims[p] != 0) {
            throw InternalError("cohomology persists beyond the fan dimension at character " +
                                format_vector(u));
        }
    }
    return out;
}

void LaurentPolynomial::add(const IntVec& exponent, long long coefficient) {
    if (coefficient == 0) return;
    auto it = terms_.find(exponent);
    if (it == terms_.end()) {
        terms_.emplace(exponent, coefficient);
        return;
    }
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
}

long long LaurentPolynomial::coefficient(const IntVec& exponent) const {
    const auto it = terms_.find(exponent);
    return it == terms_.end() ? 0 : it->second;
}

std::string LaurentPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<IntVec, long long>> ordered(terms_.begin(), terms_.end());
    std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
        long long ga = 0, gb = 0;
        for (long long x : a.first) ga += x;
        for (long long x : b.first) gb += x;
        if (ga != gb) return ga > gb;
        return lex_less(b.first, a.first);
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [exp, coef] : ordered) {
        const long long mag = coef < 0 ? -coef : coef;
        if (first) {
            if (coef < 0) os << "-";
            first = false;
        } else {
            os << (coef < 0 ? " - " : " + ");
        }
        std::vector<std::string> factors;
        for (size_t i = 0; i < exp.size(); i++) {
            if (exp[i] == 0) continue;
            std::ostringstream f;
            f << "t" << (i + 1);
            if (exp[i] != 1) f << "^" << exp[i];
            factors.push_back(f.str());
        }
        if (factors.empty()) {
            os << mag;
        } else {
            if (mag != 1) os << mag << "*";
            for (size_t i = 0; i < factors.size(); i++) {
                if (i) os << "*";
                os << factors[i];
            }
        }
    }
    return os.str();
}

LaurentPolynomial euler_characteristic(const ToricBundle& bundle, int max_growth) {
    const int d = bundle.fan.lattice_rank;
    const CoverPattern pat = cover_pattern(bundle.fan);

    IntVec lo(d, 0), hi(d, 0);
    bool seeded = false;
    for (size_t k = 0; k < bundle.fan.max_cones.size(); k++) {
        for (const IntVec& u : candidate_characters(bundle, static_cast<int>(k))) {
            if (!seeded) {
                lo = hi = u;
                seeded = true;
                continue;
            }
            for (int j = 0; j < d; j++) {
                lo[j] = std::min(lo[j], u[j]);
                hi[j] = std::max(hi[j], u[j]);
            }
        }
    }
    if (!seeded) throw InternalError("no candidate characters");
    for (int j = 0; j < d; j++) {
        lo[j] -= 1;
        hi[j] += 1;
    }

    std::map<IntVec, std::vector<int>> computed;
    auto dims_at = [&](const IntVec& u) -> const std::vector<int>& {
        auto it = computed.find(u);
        if (it == computed.end()) {
            const std::vector<int> dims = pattern_dims(bundle, pat, pattern_terms(bundle, pat, u));
            for (size_t p = d + 1; p < dims.size(); p++) {
                if (dims[p] != 0) {
                    throw InternalError("cohomology persists beyond the fan dimension at character " +
                                        format_vector(u));
                }
            }
            it = computed.emplace(u, dims).first;
        }
        return it->second;
    };

    for (int round = 0;; round++) {
        if (round > max_growth) {
            throw ValidationError(
                "cohomology support keeps growing; the filtration data looks inconsistent");
        }
        bool boundary_active = false;
        IntVec u(d);
        std::function<void(int, bool)> scan = [&](int coord, bool on_boundary) {
            if (coord == d) {
                const std::vector<int>& dims = dims_at(u);
                if (on_boundary && std::any_of(dims.begin(), dims.end(), [](int x) { return x != 0; })) {
                    boundary_active = true;
                }
                return;
            }
            for (long long x = lo[coord]; x <= hi[coord]; x++) {
                u[coord] = x;
                scan(coord + 1, on_boundary || x == lo[coord] || x == hi[coord]);
            }
        };
        scan(0, false);
        if (!boundary_active) break;
        for (int j = 0; j < d; j++) {
            lo[j] -= 1;
            hi[j] += 1;
        }
    }

    LaurentPolynomial chi;
    for (const auto& [u, dims] : computed) {
        long long alternating = 0;
        for (size_t p = 0; p < dims.size(); p++) {
            alternating += (p % 2 == 0) ? dims[p] : -dims[p];
        }
        chi.add(u, alternating);
    }
    return chi;
}

}  // namespace tvb
