#include <doctest.h>

#include <map>
#include <random>

#include "helpers.hpp"
#include "tvb/models.hpp"
#include "tvb/splitting.hpp"

using namespace tvb;
using tvbtest::char_map;
using tvbtest::check_splitting_reproduces;
using tvbtest::iv;
using tvbtest::load_bundle;
using tvbtest::qv;
using tvbtest::sp;

namespace {

// Rank-2 bundle on projective three-space whose three coordinate-ray
// filtrations jump to pairwise distinct lines; no splitting can satisfy all
// three at once.
ToricBundle incompatible_p3_bundle() {
    ToricBundle b;
    b.fan = projective_space_fan(3);
    b.rank = 2;
    auto step_bundle = [&](std::initializer_list<std::initializer_list<long long>> line) {
        Filtration f;
        f.steps.push_back({0, Subspace::full(2)});
        f.steps.push_back({1, sp(2, line)});
        return f;
    };
    b.filtrations.push_back(step_bundle({{1, 0}}));
    b.filtrations.push_back(step_bundle({{0, 1}}));
    b.filtrations.push_back(step_bundle({{1, 1}}));
    Filtration trivial;
    trivial.steps.push_back({0, Subspace::full(2)});
    b.filtrations.push_back(trivial);
    return b;
}

std::map<IntVec, QVec> entry_map(const ConeSplitting& s) {
    std::map<IntVec, QVec> out;
    for (const auto& e : s.entries) out[e.u] = e.vector;
    return out;
}

}  // namespace

TEST_CASE("filtration lookups on bundle F") {
    ToricBundle f = load_bundle("F");
    const Filtration& r1 = f.filtrations[0];
    CHECK(r1.value_at(-2) == Subspace::full(3));
    CHECK(r1.value_at(-1) == Subspace::full(3));
    CHECK(r1.value_at(0) == sp(3, {{1, 0, 0}, {0, 1, 0}}));
    CHECK(r1.value_at(1) == sp(3, {{1, 0, 0}}));
    CHECK(r1.value_at(4) == sp(3, {{1, 0, 0}}));
    CHECK(r1.value_at(5).is_zero());
    CHECK(r1.jumps() == std::vector<long long>{-1, 0, 4});
    CHECK(r1.min_through() == -1);
    CHECK(r1.max_through() == 4);

    CHECK(r1.filtration_value(qv({1, 0, 0})) == 4);
    CHECK(r1.filtration_value(qv({0, 1, 0})) == 0);
    CHECK(r1.filtration_value(qv({0, 1, 1})) == -1);
    CHECK_THROWS_AS(r1.filtration_value(qv({0, 0, 0})), ValidationError);

    const Filtration& r3 = f.filtrations[2];
    CHECK(r3.value_at(0) == sp(3, {{0, -1, 1}, {1, -1, 0}}));
    CHECK(r3.filtration_value(qv({1, -1, 0})) == 3);
    CHECK(r3.filtration_value(qv({0, -1, 1})) == 2);
    CHECK(r3.filtration_value(qv({1, 0, 0})) == -1);
}

TEST_CASE("structure validation rejects malformed filtrations") {
    ToricBundle good = load_bundle("tangent_p2");
    CHECK_NOTHROW(validate_bundle_structure(good));

    SUBCASE("wrong number of filtrations") {
        ToricBundle b = good;
        b.filtrations.pop_back();
        CHECK_THROWS_AS(validate_bundle_structure(b), ValidationError);
    }
    SUBCASE("first span must be the whole fibre") {
        ToricBundle b = good;
        b.filtrations[0].steps[0].span = sp(2, {{1, 0}});
        CHECK_THROWS_AS(validate_bundle_structure(b), ValidationError);
    }
    SUBCASE("through values must increase") {
        ToricBundle b = good;
        b.filtrations[0].steps[1].through = 0;
        CHECK_THROWS_AS(validate_bundle_structure(b), ValidationError);
    }
    SUBCASE("spans must be strictly nested") {
        ToricBundle b = good;
        b.filtrations[0].steps[1].span = sp(2, {{0, 1}});
        b.filtrations[0].steps.push_back({2, sp(2, {{1, 0}})});
        CHECK_THROWS_AS(validate_bundle_structure(b), ValidationError);
    }
    SUBCASE("repeated span is not a jump") {
        ToricBundle b = good;
        b.filtrations[0].steps.push_back({2, b.filtrations[0].steps[1].span});
        CHECK_THROWS_AS(validate_bundle_structure(b), ValidationError);
    }
    SUBCASE("explicit zero span") {
        ToricBundle b = good;
        b.filtrations[0].steps.push_back({2, Subspace::zero(2)});
        CHECK_THROWS_AS(validate_bundle_structure(b), ValidationError);
    }
    SUBCASE("ambient mismatch with the rank") {
        ToricBundle b = good;
        b.rank = 3;
        CHECK_THROWS_AS(validate_bundle_structure(b), ValidationError);
    }
}

TEST_CASE("associated characters of the golden bundles") {
    auto check_chars = [](const std::string& name,
                          const std::vector<std::vector<IntVec>>& expected) {
        ToricBundle b = load_bundle(name);
        REQUIRE(b.fan.max_cones.size() == expected.size());
        for (size_t c = 0; c < expected.size(); c++) {
            auto chars = cone_characters(b, static_cast<int>(c));
            CAPTURE(name);
            CAPTURE(c);
            REQUIRE(chars.size() == expected[c].size());
            for (size_t i = 0; i < chars.size(); i++) {
                CHECK(chars[i].u == expected[c][i]);
                CHECK(chars[i].multiplicity == 1);
            }
        }
    };

    check_chars("rank3_p1xp1", {{iv({-1, 1}), iv({0, 2}), iv({1, 0})},
                                {iv({-1, 0}), iv({0, 1}), iv({1, 2})},
                                {iv({-1, 0}), iv({0, -1}), iv({1, -2})},
                                {iv({-1, -1}), iv({0, -2}), iv({1, 0})}});
    check_chars("tangent_p2", {{iv({-1, 0}), iv({-1, 1})},
                               {iv({0, -1}), iv({1, -1})},
                               {iv({0, 1}), iv({1, 0})}});
    check_chars("F", {{iv({-2, 0}), iv({-2, 3}), iv({-1, -2})},
                      {iv({-1, -1}), iv({0, -3}), iv({4, -3})},
                      {iv({-1, 3}), iv({0, 0}), iv({4, -2})}});
    check_chars("G", {{iv({-2, 2}), iv({4, 3})},
                      {iv({-3, 2}), iv({3, 3})},
                      {iv({-4, 1}), iv({-3, -3})},
                      {iv({-2, -3}), iv({4, 1})}});
    check_chars("H", {{iv({-3, 0}), iv({-3, 2}), iv({-2, -2})},
                      {iv({-2, -1}), iv({-1, -3}), iv({2, -3})},
                      {iv({-2, 2}), iv({-1, 0}), iv({2, -2})}});
}

TEST_CASE("character multiplicities always sum to the rank") {
    for (std::string name : {"rank3_p1xp1", "tangent_p2", "F", "G", "H", "cotangent_p2"}) {
        ToricBundle b = load_bundle(name);
        for (size_t c = 0; c < b.fan.max_cones.size(); c++) {
            int total = 0;
            for (const auto& cc : cone_characters(b, static_cast<int>(c))) {
                CHECK(cc.multiplicity >= 1);
                total += cc.multiplicity;
            }
            CHECK(total == b.rank);
        }
    }
    // Three-dimensional checks through the model bundles.
    for (const ToricBundle& b :
         {tangent_bundle(projective_space_fan(3)), cotangent_bundle(projective_space_fan(3))}) {
        for (size_t c = 0; c < b.fan.max_cones.size(); c++) {
            int total = 0;
            for (const auto& cc : cone_characters(b, static_cast<int>(c))) total += cc.multiplicity;
            CHECK(total == b.rank);
        }
    }
}

TEST_CASE("incompatible filtrations are reported as such") {
    ToricBundle b = incompatible_p3_bundle();
    CHECK_NOTHROW(validate_bundle_structure(b));
    CHECK_THROWS_AS(cone_characters(b, 0), IncompatibleFiltrations);
    CHECK_THROWS_AS(analyze(b), IncompatibleFiltrations);
    try {
        cone_characters(b, 0);
        FAIL("expected IncompatibleFiltrations");
    } catch (const IncompatibleFiltrations& err) {
        CHECK(std::string(err.what()).find("negative multiplicity") != std::string::npos);
    }
}

TEST_CASE("fibre subspaces attached to a character") {
    ToricBundle f = load_bundle("F");
    // Third cone, spanned by the first two rays.
    auto [eu, above] = cone_subspaces(f, 2, iv({0, 0}));
    CHECK(eu == sp(3, {{0, 1, 0}}));
    CHECK(above.is_zero());

    auto [eu2, above2] = cone_subspaces(f, 2, iv({4, -2}));
    CHECK(eu2 == sp(3, {{1, 0, 0}}));
    CHECK(above2.is_zero());

    // A character below the splitting: everything above it already fills E_u.
    auto [eu3, above3] = cone_subspaces(f, 2, iv({-1, 0}));
    CHECK(eu3 == sp(3, {{0, 1, 0}, {0, 0, 1}}));
    CHECK(above3 == eu3);

    ToricBundle g = load_bundle("G");
    auto [eu4, above4] = cone_subspaces(g, 0, iv({-2, 2}));
    CHECK(eu4 == Subspace::full(2));
    CHECK(above4 == sp(2, {{1, 0}}));
}

TEST_CASE("splitting bases over every cone of the golden bundles") {
    for (std::string name : {"rank3_p1xp1", "tangent_p2", "F", "G", "H", "cotangent_p2"}) {
        ToricBundle b = load_bundle(name);
        auto lattice = intersection_lattice(b);
        auto ground = ground_set(lattice);
        for (size_t c = 0; c < b.fan.max_cones.size(); c++) {
            ConeSplitting s = splitting_basis(b, static_cast<int>(c), ground);
            CHECK(s.cone == static_cast<int>(c));
            check_splitting_reproduces(b, s);
            // The entry characters agree with the character multiset.
            std::map<IntVec, int> found;
            for (const auto& e : s.entries) {
                found[e.u]++;
                CHECK(e.ground_index >= 0);
                CHECK(ground.vectors[e.ground_index] == e.vector);
            }
            std::map<IntVec, int> want;
            for (const auto& cc : cone_characters(b, static_cast<int>(c))) {
                want[cc.u] = cc.multiplicity;
            }
            CHECK(found == want);
        }
    }
}

TEST_CASE("specific splitting vectors forced by the data") {
    {
        BundleAnalysis a = analyze(load_bundle("rank3_p1xp1"));
        auto m = entry_map(a.splittings[0]);
        CHECK(m[iv({-1, 1})] == qv({0, 0, 1}));
        CHECK(m[iv({0, 2})] == qv({0, 1, 0}));
        CHECK(m[iv({1, 0})] == qv({1, 1, 0}));
    }
    {
        BundleAnalysis a = analyze(load_bundle("H"));
        auto m = entry_map(a.splittings[2]);
        CHECK(m[iv({-2, 2})] == qv({0, 0, 1}));
        CHECK(m[iv({-1, 0})] == qv({0, 1, 0}));
        CHECK(m[iv({2, -2})] == qv({1, 0, 0}));
    }
    {
        BundleAnalysis a = analyze(load_bundle("G"));
        auto m = entry_map(a.splittings[0]);
        CHECK(m[iv({4, 3})] == qv({1, 0}));
        // Both remaining ground vectors realize (-2, 2); any valid pick is fine.
        bool ok = m[iv({-2, 2})] == qv({0, 1}) || m[iv({-2, 2})] == qv({1, 1});
        CHECK(ok);
    }
}

TEST_CASE("shuffled splittings are still valid splittings") {
    std::mt19937_64 rng(4242);
    for (std::string name : {"F", "G", "H"}) {
        ToricBundle b = load_bundle(name);
        auto lattice = intersection_lattice(b);
        auto ground = ground_set(lattice);
        for (int round = 0; round < 3; round++) {
            for (size_t c = 0; c < b.fan.max_cones.size(); c++) {
                ConeSplitting s = splitting_basis_shuffled(b, static_cast<int>(c), ground, rng);
                check_splitting_reproduces(b, s);
            }
        }
    }
}

TEST_CASE("candidate characters cover the splitting characters") {
    ToricBundle g = load_bundle("G");
    for (size_t c = 0; c < g.fan.max_cones.size(); c++) {
        auto candidates = candidate_characters(g, static_cast<int>(c));
        CHECK(std::is_sorted(candidates.begin(), candidates.end(),
                             [](const IntVec& a, const IntVec& b) { return lex_less(a, b); }));
        for (const auto& cc : cone_characters(g, static_cast<int>(c))) {
            CHECK(std::count(candidates.begin(), candidates.end(), cc.u) == 1);
        }
    }
}
