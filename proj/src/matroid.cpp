#include "tvb/matroid.hpp"

#include <algorithm>
#include <set>

namespace tvb {

namespace {

struct SubspaceLess {
    bool operator()(const Subspace& a, const Subspace& b) const { return subspace_less(a, b); }
};

GroundSet assemble(const IntersectionLattice& lattice, std::vector<QVec> vectors) {
    GroundSet out;
    std::sort(vectors.begin(), vectors.end(), [](const QVec& a, const QVec& b) { return lex_less(a, b); });
    out.vectors = std::move(vectors);
    out.flats.resize(lattice.members.size());
    for (size_t m = 0; m < lattice.members.size(); m++) {
        for (size_t i = 0; i < out.vectors.size(); i++) {
            if (lattice.members[m].contains(out.vectors[i])) {
                out.flats[m].push_back(static_cast<int>(i));
            }
        }
    }
    return out;
}

}  // namespace

int IntersectionLattice::index_of(const Subspace& s) const {
    for (size_t i = 0; i < members.size(); i++) {
        if (members[i] == s) return static_cast<int>(i);
    }
    return -1;
}

IntersectionLattice intersection_lattice(const ToricBundle& bundle) {
    const int r = bundle.rank;
    std::set<Subspace, SubspaceLess> members;
    for (const Filtration& f : bundle.filtrations) {
        for (const FiltrationStep& s : f.steps) members.insert(s.span);
    }
    members.insert(Subspace::full(r));
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Subspace> current(members.begin(), members.end());
        for (size_t i = 0; i < current.size(); i++) {
            for (size_t j = i + 1; j < current.size(); j++) {
                if (members.insert(intersect(current[i], current[j])).second) grew = true;
            }
        }
    }
    members.insert(Subspace::zero(r));
    IntersectionLattice out;
    out.ambient = r;
    out.members.assign(members.begin(), members.end());
    return out;
}

namespace {

// Span of the lattice members strictly contained in m. Every vector of m
// outside this span lies in exactly the members above m, so the complement
// added for m realizes the flat of m and nothing more.
Subspace proper_part(const IntersectionLattice& lattice, const Subspace& m) {
    QMat lower;
    for (const Subspace& sub : lattice.members) {
        if (sub.dim() >= m.dim() || sub.dim() == 0) continue;
        const bool inside = std::all_of(sub.basis().begin(), sub.basis().end(),
                                        [&](const QVec& row) { return m.contains(row); });
        if (!inside) continue;
        for (const QVec& row : sub.basis()) lower.push_back(row);
    }
    return Subspace::span_of(std::move(lower), lattice.ambient);
}

}  // namespace

GroundSet ground_set(const IntersectionLattice& lattice) {
    std::vector<QVec> vectors;
    for (const Subspace& m : lattice.members) {
        if (m.dim() == 0) continue;
        for (QVec& v : complement_in(m, proper_part(lattice, m))) vectors.push_back(std::move(v));
    }
    return assemble(lattice, std::move(vectors));
}

GroundSet ground_set_shuffled(const IntersectionLattice& lattice, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::vector<QVec> vectors;
    for (const Subspace& m : lattice.members) {
        if (m.dim() == 0) continue;
        Subspace covered = proper_part(lattice, m);
        const int want = m.dim() - covered.dim();
        int found = 0;
        for (int tries = 0; found < want; tries++) {
            if (tries > 1000) throw InternalError("ground_set_shuffled: rejection sampling stalled");
            QVec v(lattice.ambient, Rational(0));
            for (const QVec& row : m.basis()) {
                const int c = coeff(rng);
                for (int j = 0; j < lattice.ambient; j++) v[j] += c * row[j];
            }
            if (covered.contains(v)) continue;
            vectors.push_back(normalize_primitive(v));
            QMat rows = covered.basis();
            rows.push_back(v);
            covered = Subspace::span_of(std::move(rows), lattice.ambient);
            found++;
        }
    }
    return assemble(lattice, std::move(vectors));
}

}  // namespace tvb
