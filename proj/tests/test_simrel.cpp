#include "ham/ladders.hpp"
#include "ham/lift.hpp"
#include "ham/simrel.hpp"

#include <doctest.h>

using namespace ham;

TEST_CASE("self-simulation under the identity verifies") {
    Tas sys = gen_ladder_system(2).tas;
    std::vector<TileId> id;
    for (std::size_t i = 0; i < sys.tiles.size(); ++i) id.push_back(static_cast<TileId>(i));
    SimCheckOptions o;
    o.max_size = 6;
    auto r = check_simulation(sys, sys, RepresentationFunction::bijection(id), o, SimMode::Strong);
    CHECK(r.ok());
    CHECK(r.status(Relation::StronglyModels) == RelationStatus::Verified);
}

TEST_CASE("a lift simulates its original") {
    LiftedSystem ls = lift_system(gen_ladder_system(2).tas, 4);
    auto r = check_strongly_models(ls.lifted, ls.original, ls.representation, 7);
    CHECK(r.status(Relation::StronglyModels) == RelationStatus::Verified);
}

TEST_CASE("a broken lift fails equivalent productions") {
    LiftedSystem ls = lift_with_table(gen_ladder_system(2).tas, 4, {1, 2});
    auto r = check_equivalent_productions(ls.lifted, ls.original, ls.representation, 6);
    CHECK(r.status(Relation::EquivalentProductions) == RelationStatus::Violated);
    CHECK_FALSE(r.witnesses.empty());
}

TEST_CASE("sim-ladder standard relations at a small bound") {
    SimLadderSystem sl = gen_sim_ladder_system(3, 4);
    SimCheckOptions o;
    o.max_size = 6;
    auto r = check_simulation(sl.tas, sl.simulated, sl.representation, o, SimMode::Standard);
    CHECK(r.ok());
    CHECK(r.simulator_bound == 24);
    CHECK(r.path_cap == 16);
}

TEST_CASE("sim-ladder strong relation finds a glue mismatch early") {
    SimLadderSystem sl = gen_sim_ladder_system(3, 4);
    auto r = check_strongly_models(sl.tas, sl.simulated, sl.representation, 6);
    CHECK(r.status(Relation::StronglyModels) == RelationStatus::Violated);
    bool glue = false;
    for (const auto& w : r.witnesses) glue |= w.kind == kGlueMismatch;
    CHECK(glue);
}
