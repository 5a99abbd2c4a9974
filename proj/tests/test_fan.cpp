#include <doctest.h>

#include "helpers.hpp"
#include "tvb/fan.hpp"
#include "tvb/models.hpp"

using namespace tvb;
using tvbtest::iv;

namespace {

std::vector<Fan> model_fans() {
    return {projective_line_fan(), projective_plane_fan(), projective_space_fan(3),
            hirzebruch_fan(1),     hirzebruch_fan(2),      product_p1_p1_fan()};
}

}  // namespace

TEST_CASE("model fans are smooth and complete") {
    for (const Fan& fan : model_fans()) {
        FanValidation v = validate(fan);
        CAPTURE(fan.lattice_rank);
        CAPTURE(fan.rays.size());
        CHECK(v.smooth);
        CHECK(v.complete);
        CHECK(v.problems.empty());
        CHECK(v.ok());
        CHECK_NOTHROW(require_valid(fan));
    }
}

TEST_CASE("dual generators of selected cones") {
    // First cone of the plane fan spans rays 2 and 3.
    auto w = dual_generators(projective_plane_fan(), 0);
    REQUIRE(w.size() == 2);
    CHECK(w[0] == iv({-1, 1}));
    CHECK(w[1] == iv({-1, 0}));

    auto wh = dual_generators(hirzebruch_fan(1), 1);
    REQUIRE(wh.size() == 2);
    CHECK(wh[0] == iv({1, 1}));
    CHECK(wh[1] == iv({-1, 0}));
}

TEST_CASE("dual generators pair with their rays as the identity") {
    for (const Fan& fan : model_fans()) {
        for (size_t c = 0; c < fan.max_cones.size(); c++) {
            auto w = dual_generators(fan, static_cast<int>(c));
            const auto& cone = fan.max_cones[c];
            REQUIRE(w.size() == cone.size());
            for (size_t j = 0; j < w.size(); j++) {
                for (size_t i = 0; i < cone.size(); i++) {
                    CHECK(dot(w[j], fan.rays[cone[i]]) == (i == j ? 1 : 0));
                }
            }
        }
    }
}

TEST_CASE("walls of the projective plane") {
    auto ws = walls(projective_plane_fan());
    REQUIRE(ws.size() == 3);

    CHECK(ws[0].ray_indices == std::vector<int>{0});
    CHECK(ws[0].left_cone == 1);
    CHECK(ws[0].right_cone == 2);
    CHECK(ws[0].m_tau == iv({0, -1}));
    CHECK(ws[0].v_tau == iv({-1, -1}));

    CHECK(ws[1].ray_indices == std::vector<int>{1});
    CHECK(ws[1].left_cone == 0);
    CHECK(ws[1].right_cone == 2);
    CHECK(ws[1].m_tau == iv({-1, 0}));
    CHECK(ws[1].v_tau == iv({-1, -1}));

    CHECK(ws[2].ray_indices == std::vector<int>{2});
    CHECK(ws[2].left_cone == 0);
    CHECK(ws[2].right_cone == 1);
    CHECK(ws[2].m_tau == iv({-1, 1}));
    CHECK(ws[2].v_tau == iv({0, 1}));
}

TEST_CASE("wall invariants across model fans") {
    const std::vector<size_t> expected_counts = {1, 3, 6, 4, 4, 4};
    auto fans = model_fans();
    for (size_t f = 0; f < fans.size(); f++) {
        const Fan& fan = fans[f];
        auto ws = walls(fan);
        CHECK(ws.size() == expected_counts[f]);
        for (const Wall& w : ws) {
            CHECK(w.ray_indices.size() == static_cast<size_t>(fan.lattice_rank - 1));
            CHECK(std::is_sorted(w.ray_indices.begin(), w.ray_indices.end()));
            CHECK(w.left_cone < w.right_cone);
            CHECK(w.v_tau == fan.rays[w.left_extra_ray]);
            for (int ray : w.ray_indices) {
                CHECK(dot(w.m_tau, fan.rays[ray]) == 0);
                const auto& left = fan.max_cones[w.left_cone];
                const auto& right = fan.max_cones[w.right_cone];
                CHECK(std::count(left.begin(), left.end(), ray) == 1);
                CHECK(std::count(right.begin(), right.end(), ray) == 1);
            }
            CHECK(dot(w.m_tau, fan.rays[w.left_extra_ray]) == 1);
            CHECK(dot(w.m_tau, fan.rays[w.right_extra_ray]) == -1);
        }
    }
}

TEST_CASE("the projective line has one wall with no rays") {
    auto ws = walls(projective_line_fan());
    REQUIRE(ws.size() == 1);
    CHECK(ws[0].ray_indices.empty());
    CHECK(ws[0].left_cone == 0);
    CHECK(ws[0].right_cone == 1);
    CHECK(ws[0].m_tau == iv({1}));
    CHECK(ws[0].v_tau == iv({1}));
}

TEST_CASE("broken fans are rejected") {
    Fan plane = projective_plane_fan();

    SUBCASE("non-primitive ray") {
        Fan f = plane;
        f.rays[0] = iv({2, 0});
        CHECK_FALSE(validate(f).ok());
        CHECK_THROWS_AS(require_valid(f), ValidationError);
    }

    SUBCASE("duplicate ray") {
        Fan f = plane;
        f.rays[1] = f.rays[0];
        CHECK_FALSE(validate(f).ok());
    }

    SUBCASE("non-unimodular cone") {
        Fan f;
        f.lattice_rank = 2;
        f.rays = {iv({1, 0}), iv({1, 2}), iv({-1, -1})};
        f.max_cones = {{1, 2}, {0, 2}, {0, 1}};
        FanValidation v = validate(f);
        CHECK_FALSE(v.smooth);
        CHECK_FALSE(v.ok());
    }

    SUBCASE("missing cone leaves one-sided facets") {
        Fan f = plane;
        f.max_cones.pop_back();
        FanValidation v = validate(f);
        CHECK(v.smooth);
        CHECK_FALSE(v.complete);
    }

    SUBCASE("nested cones overlap on the same side of a facet") {
        Fan f;
        f.lattice_rank = 2;
        f.rays = {iv({1, 0}), iv({0, 1}), iv({1, 1})};
        f.max_cones = {{0, 1}, {1, 2}};
        FanValidation v = validate(f);
        CHECK(v.smooth);
        CHECK_FALSE(v.complete);
    }

    SUBCASE("rays confined to a half-plane") {
        Fan f;
        f.lattice_rank = 2;
        f.rays = {iv({1, 0}), iv({0, 1})};
        f.max_cones = {{0, 1}};
        CHECK_FALSE(validate(f).complete);
    }

    SUBCASE("cone with the wrong number of rays") {
        Fan f = plane;
        f.max_cones[0] = {0};
        CHECK_FALSE(validate(f).ok());
    }

    SUBCASE("ray index out of range") {
        Fan f = plane;
        f.max_cones[0] = {0, 5};
        CHECK_FALSE(validate(f).ok());
    }

    SUBCASE("zero ray") {
        Fan f = plane;
        f.rays[2] = iv({0, 0});
        CHECK_FALSE(validate(f).ok());
    }

    SUBCASE("problem strings use file-style one-based indices") {
        Fan f = plane;
        f.rays[0] = iv({2, 0});
        FanValidation v = validate(f);
        REQUIRE_FALSE(v.problems.empty());
        bool mentions_ray_one = false;
        for (const auto& p : v.problems) {
            if (p.find("ray 1") != std::string::npos) mentions_ray_one = true;
        }
        CHECK(mentions_ray_one);
    }
}

TEST_CASE("walls demand a valid fan") {
    Fan f = projective_plane_fan();
    f.max_cones.pop_back();
    CHECK_THROWS_AS(walls(f), ValidationError);
}
