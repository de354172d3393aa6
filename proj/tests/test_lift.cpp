#include "ham/ladders.hpp"
#include "ham/lift.hpp"

#include <doctest.h>

using namespace ham;

TEST_CASE("lifting rewrites strengths and names") {
    Tas sys = gen_ladder_system(2).tas;
    LiftedSystem ls = lift_system(sys, 4);
    CHECK(ls.lifted.temperature == 4);
    CHECK(ls.mapping.c == 2);
    for (std::size_t i = 0; i < sys.tiles.size(); ++i) {
        const TileType& a = sys.tiles[static_cast<TileId>(i)];
        const TileType& b = ls.lifted.tiles[static_cast<TileId>(i)];
        CHECK(b.name == a.name + kLiftSuffix);
        for (Side s : kSides)
            if (a.glue(s) && a.glue(s)->strength > 0) CHECK(b.glue(s)->strength == ls.mapping(a.glue(s)->strength));
    }
    CHECK_THROWS_AS(lift_system(gen_ladder_system(3).tas, 4), InputError);
}

TEST_CASE("lifted producibles correspond") {
    LiftedSystem ls = lift_system(gen_ladder_system(3).tas, 6);
    auto rep = verify_lift(ls, 8);
    CHECK(rep.ok());
    CHECK(rep.original_producibles == rep.lifted_producibles);
}

TEST_CASE("a broken strength table is caught") {
    // identity strengths at a higher temperature: rungs no longer suffice
    LiftedSystem ls = lift_with_table(gen_ladder_system(2).tas, 4, {1, 2});
    auto rep = verify_lift(ls, 8);
    CHECK_FALSE(rep.ok());
}
