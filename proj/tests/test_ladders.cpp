#include "ham/engine.hpp"
#include "ham/ladders.hpp"

#include <doctest.h>

using namespace ham;

TEST_CASE("half-ladders are stable and sized as specified") {
    LadderSystem ls = gen_ladder_system(3);
    Supertile left = build_half_ladder(ls, {LadderSide::Left, 3, {0, 1, 2}});
    CHECK(left.size() == 5 + 3 * 2);
    CHECK(is_stable(left.canonical(), ls.tas.tiles, 3));
    Supertile right = build_half_ladder(ls, mirror({LadderSide::Left, 3, {0, 2}}));
    CHECK(right.size() == 5 + 2 * 2);
    CHECK_THROWS_AS(build_half_ladder(ls, {LadderSide::Left, 2, {2}}), InputError);
}

TEST_CASE("full-rung half-ladders bind once enough rungs meet") {
    LadderSystem ls = gen_ladder_system(3);
    for (int d = 1; d <= 4; ++d) {
        std::vector<int> rungs;
        for (int i = 0; i < d; ++i) rungs.push_back(i);
        Supertile l = build_half_ladder(ls, {LadderSide::Left, d, rungs});
        Supertile r = build_half_ladder(ls, {LadderSide::Right, d, rungs});
        CHECK(combine(l, r, ls.tas.tiles, 3).empty() == (d < 3));
    }
}

TEST_CASE("sim-ladder rung types and seam strengths") {
    SimLadderSystem sl = gen_sim_ladder_system(3, 4);
    CHECK(sl.scale == 2);
    SimHalfLadderSpec b{Family::B, {LadderSide::Left, 3, {0, 1, 2}}, std::nullopt, true};
    SimHalfLadderSpec a{Family::A, {LadderSide::Right, 3, {0, 1, 2}}, std::nullopt, true};
    CHECK(rung_types(b) == std::vector<Family>{Family::B, Family::B, Family::B});
    CHECK(rung_seam_strength(Family::B, rung_types(b), Family::A, rung_types(a), 3, 4) == 3);
    Supertile sb = build_sim_half_ladder(sl, b);
    CHECK(sim_rung_types(sl, sb) == rung_types(b));
    SimHalfLadderSpec bs = b;
    bs.special = 1;
    CHECK(rung_types(bs)[1] == special_rung_of(Family::B));
    CHECK(sim_rung_types(sl, build_sim_half_ladder(sl, bs)) == rung_types(bs));
    CHECK_THROWS_AS(build_sim_half_ladder(sl, {Family::A, {LadderSide::Left, 1, {0}}, std::nullopt, true}), InputError);
}

TEST_CASE("a special rung pair alone binds across the temperature gap") {
    SimLadderSystem sl = gen_sim_ladder_system(3, 4);
    // B's special rung is of type A; facing an A half-ladder it gives tau'-tau+1 = 2
    SimHalfLadderSpec b{Family::B, {LadderSide::Left, 3, {0, 1, 2}}, 0, false};
    SimHalfLadderSpec a{Family::A, {LadderSide::Right, 3, {0, 1, 2}}, std::nullopt, true};
    CHECK(rung_seam_strength(Family::B, rung_types(b), Family::A, rung_types(a), 3, 4) == 4);
    Supertile sb = build_sim_half_ladder(sl, b);
    Supertile sa = build_sim_half_ladder(sl, a);
    CHECK_FALSE(combine(sb, sa, sl.tas.tiles, 4).empty());
}
