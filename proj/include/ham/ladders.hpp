#pragma once

#include "ham/core.hpp"
#include "ham/representation.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ham {

enum class LadderRole {
    BackboneA2,
    BackboneA3,
    CapA4,
    RungA1,
    RungTipA0,
    BackboneB2,
    BackboneB3,
    RungB1,
    RungTipB0,
};

const char* role_name(LadderRole r);

/// Ladder system at temperature tau: nine tile types named after their role.
struct LadderSystem {
    Tas tas;
    std::map<std::string, LadderRole> roles;
};

/**
 * Glues "1".."8" have strength tau, "0" (A0 east / B0 west) strength 1.
 *
 *   A4: S=1          B2: N=5 S=6 W=7
 *   A2: N=1 S=2 E=3  B3: N=6 S=5
 *   A3: N=2 S=1      B1: W=8 E=7
 *   A1: W=3 E=4      B0: W=0 E=8
 *   A0: W=4 E=0
 */
LadderSystem gen_ladder_system(int tau);

enum class LadderSide { Left, Right };

/// Backbone of 2h-1 tiles (A2 at even positions counted from the north),
/// with a rung on the A2 tiles listed in `rungs` (0 = northernmost).
struct HalfLadderSpec {
    LadderSide side = LadderSide::Left;
    int height = 1;
    std::vector<int> rungs;
};

HalfLadderSpec mirror(const HalfLadderSpec& spec);

/// Left half-ladders put the backbone at x=0, right ones at x=2. Throws
/// InputError for bad heights or rung indices.
Supertile build_half_ladder(const LadderSystem& ls, const HalfLadderSpec& spec);

// -- scale-2 simulation across temperatures --------------------------------

/// Half-ladder types of the scale-2 construction. B and C are left
/// half-ladders, A and D right ones.
enum class Family { A, B, C, D };

char family_letter(Family f);
Family special_rung_of(Family f);  // A->C, B->A, C->D, D->B
bool is_left_family(Family f);

enum class BlockSet { Top, Bottom, Special, None };

const char* block_set_name(BlockSet s);

struct SimTileInfo {
    Family family = Family::A;
    std::string block;      // block name, e.g. "A2t" or "A1s"
    LadderRole role = LadderRole::BackboneA2;
    BlockSet set = BlockSet::None;
    bool special_rung = false;  // rung blocks hanging off the special base
    Vec2 offset;                // position inside the 2x2 block
};

struct SimLadderSystem {
    Tas tas;
    Tas simulated;
    int scale = 2;
    std::map<std::string, SimTileInfo> family;
    RepresentationFunction representation;
};

SimLadderSystem gen_sim_ladder_system(int tau, int tau_prime);

/// A simulator half-ladder: blocks of `family`, with at most one special
/// rung. Backbone blocks below the special base come from the bottom set,
/// those above from the top set; with no special base, `bottom_set` picks.
struct SimHalfLadderSpec {
    Family family = Family::B;
    HalfLadderSpec shape;
    std::optional<int> special;  // A2 index of the special base block
    bool bottom_set = false;
};

/// Built at block coordinates equal to the ladder coordinates of `shape`.
Supertile build_sim_half_ladder(const SimLadderSystem& sl, const SimHalfLadderSpec& spec);

/// Rung type letters of the rungs of a simulator half-ladder (north first).
std::vector<Family> rung_types(const SimHalfLadderSpec& spec);

/// Rung types read off the tiles of a simulator supertile, north first.
std::vector<Family> sim_rung_types(const SimLadderSystem& sl, const Supertile& s);

/// Seam strength of two aligned rung lists: tau'-tau+1 for equal types,
/// 1 otherwise. Each rung type must be the family's own or its special type.
int rung_seam_strength(Family left_family, const std::vector<Family>& left_rungs, Family right_family,
                       const std::vector<Family>& right_rungs, int tau, int tau_prime);

}  // namespace ham
