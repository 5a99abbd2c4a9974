#include <doctest.h>

#include <random>
#include <set>

#include "helpers.hpp"
#include "tvb/matroid.hpp"
#include "tvb/models.hpp"
#include "tvb/parliament.hpp"

using namespace tvb;
using tvbtest::iv;
using tvbtest::load_bundle;
using tvbtest::qv;
using tvbtest::sp;

namespace {

std::vector<int> member_dims(const IntersectionLattice& lattice) {
    std::vector<int> dims;
    for (const auto& m : lattice.members) dims.push_back(m.dim());
    return dims;
}

}  // namespace

TEST_CASE("intersection lattices of the golden rank-3 bundles") {
    for (std::string name : {"rank3_p1xp1", "F"}) {
        ToricBundle b = load_bundle(name);
        IntersectionLattice lattice = intersection_lattice(b);
        CAPTURE(name);
        CHECK(lattice.ambient == 3);
        CHECK(member_dims(lattice) == std::vector<int>{0, 1, 1, 1, 1, 1, 2, 2, 2, 3});
        CHECK(lattice.index_of(Subspace::zero(3)) == 0);
        CHECK(lattice.index_of(Subspace::full(3)) == 9);
        CHECK(lattice.index_of(sp(3, {{0, 1, 0}, {1, 0, 1}})) == -1);

        // Closed under pairwise intersection.
        for (const auto& x : lattice.members) {
            for (const auto& y : lattice.members) {
                CHECK(lattice.index_of(intersect(x, y)) >= 0);
            }
        }
        // Every filtration span is a member.
        for (const auto& f : b.filtrations) {
            for (const auto& step : f.steps) CHECK(lattice.index_of(step.span) >= 0);
        }
    }
}

TEST_CASE("ground sets of the golden bundles") {
    {
        IntersectionLattice lattice = intersection_lattice(load_bundle("rank3_p1xp1"));
        GroundSet g = ground_set(lattice);
        CHECK(g.vectors == std::vector<QVec>{qv({0, 0, 1}), qv({0, 1, 0}), qv({1, 0, 0}),
                                             qv({1, 0, 1}), qv({1, 1, 0})});
    }
    {
        IntersectionLattice lattice = intersection_lattice(load_bundle("F"));
        GroundSet g = ground_set(lattice);
        CHECK(g.vectors == std::vector<QVec>{qv({0, 0, 1}), qv({0, 1, -1}), qv({0, 1, 0}),
                                             qv({1, -1, 0}), qv({1, 0, 0})});
    }
    {
        // H has the same filtration spans as F, so the same expansion.
        IntersectionLattice lf = intersection_lattice(load_bundle("F"));
        IntersectionLattice lh = intersection_lattice(load_bundle("H"));
        CHECK(ground_set(lf).vectors == ground_set(lh).vectors);
    }
    {
        IntersectionLattice lattice = intersection_lattice(load_bundle("tangent_p2"));
        GroundSet g = ground_set(lattice);
        CHECK(g.vectors == std::vector<QVec>{qv({0, 1}), qv({1, 0}), qv({1, 1})});
    }
}

TEST_CASE("flats list exactly the vectors inside each member") {
    for (std::string name : {"rank3_p1xp1", "F", "G", "H", "tangent_p2", "cotangent_p2"}) {
        ToricBundle b = load_bundle(name);
        IntersectionLattice lattice = intersection_lattice(b);
        GroundSet g = ground_set(lattice);
        CAPTURE(name);
        REQUIRE(g.flats.size() == lattice.members.size());
        for (size_t m = 0; m < lattice.members.size(); m++) {
            const Subspace& member = lattice.members[m];
            QMat inside;
            for (size_t i = 0; i < g.vectors.size(); i++) {
                const bool in_flat =
                    std::count(g.flats[m].begin(), g.flats[m].end(), static_cast<int>(i)) == 1;
                CHECK(in_flat == member.contains(g.vectors[i]));
                if (in_flat) inside.push_back(g.vectors[i]);
            }
            // The expansion is free: the vectors of a flat span their member.
            CHECK(Subspace::span_of(inside, lattice.ambient) == member);
        }
        for (const QVec& v : g.vectors) CHECK(normalize_primitive(v) == v);
        CHECK(std::is_sorted(g.vectors.begin(), g.vectors.end(),
                             [](const QVec& a, const QVec& b) { return lex_less(a, b); }));
    }
}

TEST_CASE("line-bundle sums split equivariantly, the golden bundles do not") {
    for (std::string name : {"rank3_p1xp1", "F", "G", "H", "tangent_p2", "cotangent_p2"}) {
        ToricBundle b = load_bundle(name);
        GroundSet g = ground_set(intersection_lattice(b));
        CHECK_FALSE(splits_equivariantly(g, b.rank));
    }
    {
        ToricBundle b = direct_sum_line_bundles(projective_plane_fan(), {{0, 0, 1}, {1, 1, 0}});
        GroundSet g = ground_set(intersection_lattice(b));
        CHECK(g.vectors == std::vector<QVec>{qv({0, 1}), qv({1, 0})});
        CHECK(splits_equivariantly(g, b.rank));
    }
    {
        ToricBundle b = line_bundle(projective_line_fan(), {2, 1});
        GroundSet g = ground_set(intersection_lattice(b));
        CHECK(splits_equivariantly(g, b.rank));
    }
}

TEST_CASE("randomized ground re-selection preserves the shape of the expansion") {
    std::mt19937_64 rng(515151);
    for (std::string name : {"rank3_p1xp1", "F", "G", "H"}) {
        ToricBundle b = load_bundle(name);
        IntersectionLattice lattice = intersection_lattice(b);
        GroundSet base = ground_set(lattice);

        std::multiset<std::vector<int>> base_profile;
        for (size_t i = 0; i < base.vectors.size(); i++) {
            std::vector<int> memberships;
            for (size_t m = 0; m < lattice.members.size(); m++) {
                if (std::count(base.flats[m].begin(), base.flats[m].end(), static_cast<int>(i))) {
                    memberships.push_back(static_cast<int>(m));
                }
            }
            base_profile.insert(memberships);
        }

        for (int round = 0; round < 4; round++) {
            GroundSet other = ground_set_shuffled(lattice, rng);
            CAPTURE(name);
            CHECK(other.vectors.size() == base.vectors.size());
            std::multiset<std::vector<int>> profile;
            for (size_t i = 0; i < other.vectors.size(); i++) {
                std::vector<int> memberships;
                for (size_t m = 0; m < lattice.members.size(); m++) {
                    const Subspace& member = lattice.members[m];
                    const bool in_flat = std::count(other.flats[m].begin(), other.flats[m].end(),
                                                    static_cast<int>(i)) == 1;
                    CHECK(in_flat == member.contains(other.vectors[i]));
                    if (in_flat) memberships.push_back(static_cast<int>(m));
                }
                profile.insert(memberships);
            }
            CHECK(profile == base_profile);
        }
    }
}
