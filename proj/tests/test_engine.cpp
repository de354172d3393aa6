#include "ham/engine.hpp"
#include "ham/ladders.hpp"
#include "helpers.hpp"

#include <doctest.h>

using namespace ham;
using namespace testing;

namespace {

Tas domino_system(int tau) {
    Tas sys;
    sys.tiles = TileSet({tile("a", {{Side::East, "g", 2}, {Side::North, "h", 1}}),
                         tile("b", {{Side::West, "g", 2}, {Side::North, "k", 1}}),
                         tile("c", {{Side::South, "h", 1}, {Side::East, "m", 2}}),
                         tile("d", {{Side::South, "k", 1}, {Side::West, "m", 2}})});
    sys.temperature = tau;
    return sys;
}

}  // namespace

TEST_CASE("combine reports seams and respects the temperature") {
    Tas sys = domino_system(2);
    auto r = combine(singleton(0), singleton(1), sys.tiles, 2);
    REQUIRE(r.results.size() == 1);
    CHECK(r.attachments[0].seam_strength == 2);
    CHECK(r.attachments[0].translation == Vec2{1, 0});
    CHECK(combine(singleton(0), singleton(2), sys.tiles, 2).empty());
    CHECK(combine(singleton(0), singleton(2), sys.tiles, 1).results.size() == 1);
}

TEST_CASE("cooperative binding needs both glues") {
    Tas sys = domino_system(2);
    Supertile ab = st({{0, 0, 0}, {1, 0, 1}});
    Supertile cd = st({{0, 0, 2}, {1, 0, 3}});
    auto r = combine(ab, cd, sys.tiles, 2);
    REQUIRE(r.results.size() == 1);
    CHECK(r.attachments[0].seam_strength == 2);
    CHECK(r.attachments[0].contacts.size() == 2);
}

TEST_CASE("enumeration of the domino system") {
    Tas sys = domino_system(2);
    auto prods = enumerate_producibles(sys, 4);
    // a, b, c, d, ab, cd, abcd
    CHECK(prods.size() == 7);
    CHECK(prods.contains(st({{0, 0, 0}, {1, 0, 1}, {0, 1, 2}, {1, 1, 3}})));
    auto term = terminal_members(prods, sys);
    CHECK(term.size() == 1);
    CHECK_THROWS_AS(enumerate_producibles(sys, 0), InputError);
}

TEST_CASE("enumeration is deterministic") {
    Tas sys = gen_ladder_system(2).tas;
    auto a = enumerate_producibles(sys, 6);
    auto b = enumerate_producibles(sys, 6);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a.items[i] == b.items[i]);
}

TEST_CASE("ladder system at temperature 3 has nine singletons") {
    CHECK(enumerate_producibles(gen_ladder_system(3).tas, 1).size() == 9);
}
