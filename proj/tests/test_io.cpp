#include "ham/io.hpp"
#include "ham/ladders.hpp"
#include "helpers.hpp"

#include <doctest.h>

using namespace ham;
using namespace testing;

TEST_CASE("system files round-trip") {
    Tas sys = gen_ladder_system(3).tas;
    sys.initial.push_back({st({{0, 0, sys.tiles.id("A2")}, {0, 1, sys.tiles.id("A4")}}), 5});
    sys.initial.push_back({singleton(sys.tiles.id("A3")), kInfiniteCount});
    Json j = tas_to_json(sys);
    Tas back = tas_from_json(Json::parse(j.dump()));
    CHECK(back.tiles == sys.tiles);
    CHECK(back.temperature == sys.temperature);
    REQUIRE(back.initial.size() == 2);
    CHECK(back.initial[0].count == 5);
    CHECK(back.initial[1].count == kInfiniteCount);
    CHECK(tas_to_json(back) == j);
    CHECK(j["initial_state"][1]["count"] == "inf");
}

TEST_CASE("loader rejects malformed systems") {
    Json j = tas_to_json(gen_ladder_system(3).tas);
    Json dup = j;
    dup["tiles"].push_back(dup["tiles"][0]);
    CHECK_THROWS_AS(tas_from_json(dup), InputError);
    Json clash = j;
    clash["tiles"][0]["north"] = {{"label", "2"}, {"strength", 1}};
    CHECK_THROWS_AS(tas_from_json(clash), InputError);
    Json bad_count = j;
    bad_count["initial_state"] = Json::array({{{"assembly", Json::array({{{"x", 0}, {"y", 0}, {"tile", "A2"}}})}, {"count", 0}}});
    CHECK_THROWS_AS(tas_from_json(bad_count), InputError);
    CHECK_THROWS_AS(tas_from_json(Json::parse("[]")), InputError);
}

TEST_CASE("representation files round-trip") {
    SimLadderSystem sl = gen_sim_ladder_system(3, 4);
    Json j = rep_to_json(sl.representation, sl.tas.tiles, sl.simulated.tiles);
    auto back = rep_from_json(j, sl.tas.tiles, sl.simulated.tiles);
    CHECK(back.scale() == 2);
    CHECK(back.entries().size() == sl.representation.entries().size());
    CHECK(rep_to_json(back, sl.tas.tiles, sl.simulated.tiles) == j);
}

TEST_CASE("svg marks strengths by edge width") {
    Tas sys = gen_ladder_system(3).tas;
    std::string svg = render_svg(st({{0, 0, sys.tiles.id("A1")}, {1, 0, sys.tiles.id("A0")}}), sys.tiles);
    CHECK(svg.find("<svg") == 0);
    CHECK(svg.find("stroke-width=\"7\"") != std::string::npos);
    CHECK(svg.find("stroke-width=\"3\"") != std::string::npos);
}
