#include "helpers.hpp"

#include <doctest.h>

using namespace ham;
using namespace testing;

TEST_CASE("tile sets reject duplicates and conflicting strengths") {
    CHECK_THROWS_AS(TileSet({tile("a", {}), tile("a", {})}), InputError);
    CHECK_THROWS_AS(TileSet({tile("a", {{Side::East, "g", 1}}), tile("b", {{Side::West, "g", 2}})}), InputError);
    CHECK_NOTHROW(TileSet({tile("a", {{Side::East, "g", 2}}), tile("b", {{Side::West, "g", 2}})}));
}

TEST_CASE("bonds need equal labels on abutting sides") {
    TileSet ts({tile("a", {{Side::East, "g", 2}, {Side::North, "h", 1}}), tile("b", {{Side::West, "g", 2}})});
    CHECK(ts.bond(0, Side::East, 1) == 2);
    CHECK(ts.bond(1, Side::West, 0) == 2);
    CHECK(ts.bond(0, Side::North, 1) == 0);
    CHECK(ts.bond(0, Side::East, 0) == 0);
}

TEST_CASE("canonical form is translation invariant") {
    Supertile a = st({{5, 7, 0}, {6, 7, 1}});
    Supertile b = st({{-3, 2, 0}, {-2, 2, 1}});
    CHECK(a == b);
    CHECK(a.cells().front().x == 0);
    CHECK(a.cells().front().y == 0);
    CHECK_FALSE(a == st({{0, 0, 1}, {1, 0, 0}}));
    CHECK_THROWS_AS(Assembly({{0, 0, 0}, {0, 0, 1}}), InputError);
}

TEST_CASE("stoer-wagner on a small weighted path and cycle") {
    BindingGraph path{3, {{0, 1, 3}, {1, 2, 1}}};
    CHECK(min_cut_weight(path) == 1);
    BindingGraph cycle{4, {{0, 1, 2}, {1, 2, 2}, {2, 3, 2}, {3, 0, 2}}};
    CHECK(min_cut_weight(cycle) == 4);
    BindingGraph split{3, {{0, 1, 5}}};
    CHECK(min_cut_weight(split) == 0);
    CHECK_FALSE(is_connected(split));
    auto part = min_cut_partition(path);
    REQUIRE(part.size() == 3);
    CHECK(part[0] == part[1]);
    CHECK(part[1] != part[2]);
}

TEST_CASE("stability of a domino") {
    TileSet ts({tile("a", {{Side::East, "g", 2}}), tile("b", {{Side::West, "g", 2}})});
    Assembly d({{0, 0, 0}, {1, 0, 1}});
    CHECK(is_stable(d, ts, 2));
    CHECK_FALSE(is_stable(d, ts, 3));
    CHECK(is_stable(Assembly({{0, 0, 0}}), ts, 9));
}

TEST_CASE("system validation checks the initial state") {
    Tas sys;
    sys.tiles = TileSet({tile("a", {{Side::East, "g", 1}}), tile("b", {{Side::West, "g", 1}})});
    sys.temperature = 2;
    CHECK_NOTHROW(sys.validate());
    CHECK(sys.initial_supertiles().size() == 2);
    sys.initial.push_back({st({{0, 0, 0}, {1, 0, 1}}), kInfiniteCount});
    CHECK_THROWS_AS(sys.validate(), InputError);
    sys.temperature = 1;
    CHECK_NOTHROW(sys.validate());
}
