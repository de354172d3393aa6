#include "ham/representation.hpp"
#include "helpers.hpp"

#include <doctest.h>

using namespace ham;
using namespace testing;

namespace {

// scale 2: full block {0,1,2,3} -> X, top half {2,3} -> Y
RepresentationFunction two_block() {
    RepresentationFunction rep(2);
    rep.add({{0, 0, 0}, {1, 0, 1}, {0, 1, 2}, {1, 1, 3}}, 0);
    rep.add({{0, 1, 2}, {1, 1, 3}}, 1);
    return rep;
}

}  // namespace

TEST_CASE("patterns are validated") {
    RepresentationFunction rep(2);
    CHECK_THROWS_AS(rep.add({{2, 0, 0}}, 0), InputError);
    CHECK_THROWS_AS(rep.add({}, 0), InputError);
    rep.add({{0, 0, 0}}, 0);
    CHECK_THROWS_AS(rep.add({{0, 0, 0}}, 1), InputError);
    CHECK(rep.lookup({{0, 0, 0}}) == TileId{0});
    CHECK_FALSE(rep.lookup({{1, 0, 0}}));
}

TEST_CASE("block mapping with phases") {
    auto rep = two_block();
    Assembly a({{0, 0, 0}, {1, 0, 1}, {0, 1, 2}, {1, 1, 3}, {2, 1, 2}, {3, 1, 3}});
    auto bm = map_blocks(rep, a);
    CHECK(bm.image.size() == 2);
    CHECK(bm.unmapped.empty());
    auto shifted = map_blocks(rep, a, {1, 0});
    CHECK(shifted.image.size() < 2);
    auto packed = packed_blocks(rep, a, {0, 0});
    REQUIRE(packed.size() == 2);
    CHECK(packed[0].tile == 0);
    CHECK(packed[1].tile == 1);
}

TEST_CASE("fuzz must touch a mapped block orthogonally") {
    auto rep = two_block();
    Assembly side({{0, 0, 0}, {1, 0, 1}, {0, 1, 2}, {1, 1, 3}, {2, 0, 0}});
    CHECK(check_clean_mapping(rep, side).clean);
    Assembly diag({{0, 0, 0}, {1, 0, 1}, {0, 1, 2}, {1, 1, 3}, {2, 2, 0}});
    auto r = check_clean_mapping(rep, diag);
    CHECK_FALSE(r.clean);
    REQUIRE(r.witness);
    CHECK(*r.witness == Vec2{1, 1});
}

TEST_CASE("represent picks the phase mapping the most blocks") {
    auto rep = two_block();
    Supertile s = st({{1, 1, 0}, {2, 1, 1}, {1, 2, 2}, {2, 2, 3}});
    auto img = represent(rep, s);
    REQUIRE(img.image);
    CHECK(img.image->size() == 1);
    CHECK(img.image->cells()[0].tile == 0);
    CHECK_FALSE(represent(rep, st({{0, 0, 1}})).image);
}

TEST_CASE("bijections map tile for tile") {
    auto rep = RepresentationFunction::bijection({1, 0});
    auto img = represent(rep, st({{0, 0, 0}, {1, 0, 1}}));
    REQUIRE(img.image);
    CHECK(*img.image == st({{0, 0, 1}, {1, 0, 0}}));
}
