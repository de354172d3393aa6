#include "ham/ladders.hpp"

#include <algorithm>
#include <array>
#include <tuple>

namespace ham {

const char* role_name(LadderRole r) {
    switch (r) {
    case LadderRole::BackboneA2: return "backbone-A2";
    case LadderRole::BackboneA3: return "backbone-A3";
    case LadderRole::CapA4: return "cap-A4";
    case LadderRole::RungA1: return "rung-A1";
    case LadderRole::RungTipA0: return "rung-tip-A0";
    case LadderRole::BackboneB2: return "backbone-B2";
    case LadderRole::BackboneB3: return "backbone-B3";
    case LadderRole::RungB1: return "rung-B1";
    case LadderRole::RungTipB0: return "rung-tip-B0";
    }
    return "?";
}

namespace {

std::string tile_name(LadderRole r) {
    switch (r) {
    case LadderRole::BackboneA2: return "A2";
    case LadderRole::BackboneA3: return "A3";
    case LadderRole::CapA4: return "A4";
    case LadderRole::RungA1: return "A1";
    case LadderRole::RungTipA0: return "A0";
    case LadderRole::BackboneB2: return "B2";
    case LadderRole::BackboneB3: return "B3";
    case LadderRole::RungB1: return "B1";
    case LadderRole::RungTipB0: return "B0";
    }
    return "?";
}

TileType make_tile(std::string name, std::initializer_list<std::pair<Side, Glue>> glues) {
    TileType t;
    t.name = std::move(name);
    for (const auto& [side, g] : glues) t.glue(side) = g;
    return t;
}

}  // namespace

LadderSystem gen_ladder_system(int tau) {
    if (tau < 2) throw InputError("ladder system needs temperature >= 2");
    auto g = [tau](const char* label) { return Glue{label, tau}; };
    using S = Side;
    LadderSystem ls;
    std::vector<TileType> tiles{
        make_tile("A2", {{S::North, g("1")}, {S::East, g("3")}, {S::South, g("2")}}),
        make_tile("A3", {{S::North, g("2")}, {S::South, g("1")}}),
        make_tile("A4", {{S::South, g("1")}}),
        make_tile("A1", {{S::West, g("3")}, {S::East, g("4")}}),
        make_tile("A0", {{S::West, g("4")}, {S::East, Glue{"0", 1}}}),
        make_tile("B2", {{S::North, g("5")}, {S::South, g("6")}, {S::West, g("7")}}),
        make_tile("B3", {{S::North, g("6")}, {S::South, g("5")}}),
        make_tile("B1", {{S::East, g("7")}, {S::West, g("8")}}),
        make_tile("B0", {{S::East, g("8")}, {S::West, Glue{"0", 1}}}),
    };
    ls.tas.name = "ladder-tau" + std::to_string(tau);
    ls.tas.tiles = TileSet(std::move(tiles));
    ls.tas.temperature = tau;
    for (LadderRole r : {LadderRole::BackboneA2, LadderRole::BackboneA3, LadderRole::CapA4, LadderRole::RungA1,
                         LadderRole::RungTipA0, LadderRole::BackboneB2, LadderRole::BackboneB3, LadderRole::RungB1,
                         LadderRole::RungTipB0})
        ls.roles[tile_name(r)] = r;
    return ls;
}

HalfLadderSpec mirror(const HalfLadderSpec& spec) {
    HalfLadderSpec m = spec;
    m.side = spec.side == LadderSide::Left ? LadderSide::Right : LadderSide::Left;
    return m;
}

namespace {

void check_shape(const HalfLadderSpec& spec) {
    if (spec.height < 1) throw InputError("half-ladder height must be >= 1");
    for (std::size_t i = 0; i < spec.rungs.size(); ++i) {
        int r = spec.rungs[i];
        if (r < 0 || r >= spec.height)
            throw InputError("rung index " + std::to_string(r) + " outside [0, " + std::to_string(spec.height - 1) +
                             "]");
        if (i > 0 && r <= spec.rungs[i - 1]) throw InputError("rung indices must be strictly increasing");
    }
}

// One cell of a half-ladder at ladder coordinates, tagged with its role and
// the A2 index it belongs to (-1 for A3 cells).
struct LadderCell {
    int x, y;
    LadderRole role;
    int index;
};

std::vector<LadderCell> half_ladder_cells(const HalfLadderSpec& spec) {
    check_shape(spec);
    const bool left = spec.side == LadderSide::Left;
    const int col = left ? 0 : 2;
    std::vector<LadderCell> out;
    for (int p = 0; p < 2 * spec.height - 1; ++p) {
        int y = 2 * spec.height - 2 - p;
        if (p % 2 == 0)
            out.push_back({col, y, left ? LadderRole::BackboneA2 : LadderRole::BackboneB2, p / 2});
        else
            out.push_back({col, y, left ? LadderRole::BackboneA3 : LadderRole::BackboneB3, -1});
    }
    for (int r : spec.rungs) {
        int y = 2 * spec.height - 2 - 2 * r;
        if (left) {
            out.push_back({1, y, LadderRole::RungA1, r});
            out.push_back({2, y, LadderRole::RungTipA0, r});
        } else {
            out.push_back({1, y, LadderRole::RungB1, r});
            out.push_back({0, y, LadderRole::RungTipB0, r});
        }
    }
    return out;
}

}  // namespace

Supertile build_half_ladder(const LadderSystem& ls, const HalfLadderSpec& spec) {
    std::vector<Cell> cells;
    for (const LadderCell& c : half_ladder_cells(spec))
        cells.push_back({static_cast<std::int16_t>(c.x), static_cast<std::int16_t>(c.y),
                         ls.tas.tiles.id(tile_name(c.role))});
    return canonicalize_cells(std::move(cells));
}

char family_letter(Family f) { return "ABCD"[static_cast<int>(f)]; }

Family special_rung_of(Family f) {
    switch (f) {
    case Family::A: return Family::C;
    case Family::B: return Family::A;
    case Family::C: return Family::D;
    case Family::D: return Family::B;
    }
    return f;
}

bool is_left_family(Family f) { return f == Family::B || f == Family::C; }

const char* block_set_name(BlockSet s) {
    switch (s) {
    case BlockSet::Top: return "top";
    case BlockSet::Bottom: return "bottom";
    case BlockSet::Special: return "special";
    case BlockSet::None: return "n/a";
    }
    return "?";
}

namespace {

constexpr Vec2 kTL{0, 1}, kTR{1, 1}, kBL{0, 0}, kBR{1, 0};

struct BlockSpec {
    std::string name;
    LadderRole role;
    BlockSet set;
    bool special_rung;
    // exterior glues per tile slot: index 0 TL, 1 TR, 2 BL, 3 BR
    std::array<std::array<std::optional<Glue>, 4>, 4> ext;
};

class SimBuilder {
public:
    SimBuilder(int tau, int tau_prime) : tau_(tau), tp_(tau_prime), hi_((tau_prime + 1) / 2), lo_(tau_prime / 2) {}

    // T glue on the north (south) side split over the two top (bottom) tiles.
    void north(BlockSpec& b, Family f, const std::string& g, char marker) const {
        b.ext[0][0] = Glue{prefix(f) + g + "|w|" + marker, hi_};
        b.ext[1][0] = Glue{prefix(f) + g + "|e|" + marker, lo_};
    }
    void south(BlockSpec& b, Family f, const std::string& g, char marker) const {
        b.ext[2][2] = Glue{prefix(f) + g + "|w|" + marker, hi_};
        b.ext[3][2] = Glue{prefix(f) + g + "|e|" + marker, lo_};
    }
    void east(BlockSpec& b, Family f, const std::string& g) const {
        b.ext[1][1] = Glue{prefix(f) + g + "|n", hi_};
        b.ext[3][1] = Glue{prefix(f) + g + "|s", lo_};
    }
    void west(BlockSpec& b, Family f, const std::string& g) const {
        b.ext[0][3] = Glue{prefix(f) + g + "|n", hi_};
        b.ext[2][3] = Glue{prefix(f) + g + "|s", lo_};
    }
    // Rung end: type glue on the top tile, H on the bottom tile.
    void rung_end(BlockSpec& b, Side side, Family type) const {
        int top = side == Side::East ? 1 : 0;
        int bottom = side == Side::East ? 3 : 2;
        b.ext[top][static_cast<int>(side)] = Glue{std::string(1, family_letter(type)), tp_ - tau_};
        b.ext[bottom][static_cast<int>(side)] = Glue{"H", 1};
    }

    void emit(Family f, const BlockSpec& b, SimLadderSystem& out, std::vector<TileType>& tiles) const {
        const std::string base = std::string(1, family_letter(f)) + "." + b.name;
        static constexpr std::array<const char*, 4> slot{"TL", "TR", "BL", "BR"};
        static constexpr std::array<Vec2, 4> pos{kTL, kTR, kBL, kBR};
        std::array<TileType, 4> t;
        for (int i = 0; i < 4; ++i) {
            t[i].name = base + "." + slot[i];
            for (int s = 0; s < 4; ++s) t[i].glues[s] = b.ext[i][s];
        }
        t[0].glue(Side::East) = t[1].glue(Side::West) = Glue{base + "|t", tp_};
        t[2].glue(Side::East) = t[3].glue(Side::West) = Glue{base + "|b", tp_};
        t[0].glue(Side::South) = t[2].glue(Side::North) = Glue{base + "|w", hi_};
        t[1].glue(Side::South) = t[3].glue(Side::North) = Glue{base + "|e", lo_};
        for (int i = 0; i < 4; ++i) {
            out.family[t[i].name] = SimTileInfo{f, b.name, b.role, b.set, b.special_rung, pos[i]};
            tiles.push_back(std::move(t[i]));
        }
    }

private:
    static std::string prefix(Family f) { return std::string(1, family_letter(f)) + "|"; }

    int tau_, tp_, hi_, lo_;
};

BlockSpec block(std::string name, LadderRole role, BlockSet set, bool special_rung = false) {
    return BlockSpec{std::move(name), role, set, special_rung, {}};
}

std::vector<BlockSpec> left_blocks(const SimBuilder& sb, Family f) {
    std::vector<BlockSpec> out;
    for (auto [suffix, marker, set] : {std::tuple{"t", 'U', BlockSet::Top}, std::tuple{"b", 'D', BlockSet::Bottom}}) {
        auto a2 = block(std::string("A2") + suffix, LadderRole::BackboneA2, set);
        sb.north(a2, f, "1", marker);
        sb.south(a2, f, "2", marker);
        sb.east(a2, f, "3");
        out.push_back(a2);
        auto a3 = block(std::string("A3") + suffix, LadderRole::BackboneA3, set);
        sb.north(a3, f, "2", marker);
        sb.south(a3, f, "1", marker);
        out.push_back(a3);
        auto a4 = block(std::string("A4") + suffix, LadderRole::CapA4, set);
        sb.south(a4, f, "1", marker);
        out.push_back(a4);
    }
    auto a2s = block("A2s", LadderRole::BackboneA2, BlockSet::Special);
    sb.north(a2s, f, "1", 'U');
    sb.south(a2s, f, "2", 'D');
    sb.east(a2s, f, "3s");
    out.push_back(a2s);

    auto a1 = block("A1", LadderRole::RungA1, BlockSet::None);
    sb.west(a1, f, "3");
    sb.east(a1, f, "4");
    out.push_back(a1);
    auto a0 = block("A0", LadderRole::RungTipA0, BlockSet::None);
    sb.west(a0, f, "4");
    sb.rung_end(a0, Side::East, f);
    out.push_back(a0);
    auto a1s = block("A1s", LadderRole::RungA1, BlockSet::None, true);
    sb.west(a1s, f, "3s");
    sb.east(a1s, f, "4s");
    out.push_back(a1s);
    auto a0s = block("A0s", LadderRole::RungTipA0, BlockSet::None, true);
    sb.west(a0s, f, "4s");
    sb.rung_end(a0s, Side::East, special_rung_of(f));
    out.push_back(a0s);
    return out;
}

std::vector<BlockSpec> right_blocks(const SimBuilder& sb, Family f) {
    std::vector<BlockSpec> out;
    for (auto [suffix, marker, set] : {std::tuple{"t", 'U', BlockSet::Top}, std::tuple{"b", 'D', BlockSet::Bottom}}) {
        auto b2 = block(std::string("B2") + suffix, LadderRole::BackboneB2, set);
        sb.north(b2, f, "5", marker);
        sb.south(b2, f, "6", marker);
        sb.west(b2, f, "7");
        out.push_back(b2);
        auto b3 = block(std::string("B3") + suffix, LadderRole::BackboneB3, set);
        sb.north(b3, f, "6", marker);
        sb.south(b3, f, "5", marker);
        out.push_back(b3);
    }
    auto b2s = block("B2s", LadderRole::BackboneB2, BlockSet::Special);
    sb.north(b2s, f, "5", 'U');
    sb.south(b2s, f, "6", 'D');
    sb.west(b2s, f, "7s");
    out.push_back(b2s);

    auto b1 = block("B1", LadderRole::RungB1, BlockSet::None);
    sb.east(b1, f, "7");
    sb.west(b1, f, "8");
    out.push_back(b1);
    auto b0 = block("B0", LadderRole::RungTipB0, BlockSet::None);
    sb.east(b0, f, "8");
    sb.rung_end(b0, Side::West, f);
    out.push_back(b0);
    auto b1s = block("B1s", LadderRole::RungB1, BlockSet::None, true);
    sb.east(b1s, f, "7s");
    sb.west(b1s, f, "8s");
    out.push_back(b1s);
    auto b0s = block("B0s", LadderRole::RungTipB0, BlockSet::None, true);
    sb.east(b0s, f, "8s");
    sb.rung_end(b0s, Side::West, special_rung_of(f));
    out.push_back(b0s);
    return out;
}

}  // namespace

SimLadderSystem gen_sim_ladder_system(int tau, int tau_prime) {
    if (tau < 2) throw InputError("simulated ladder system needs temperature >= 2");
    if (tau_prime <= tau) throw InputError("simulator temperature must exceed the simulated one");
    SimLadderSystem out;
    LadderSystem ls = gen_ladder_system(tau);
    out.simulated = ls.tas;
    SimBuilder sb(tau, tau_prime);
    std::vector<TileType> tiles;
    std::vector<std::pair<Family, BlockSpec>> blocks;
    for (Family f : {Family::A, Family::B, Family::C, Family::D}) {
        for (auto& b : is_left_family(f) ? left_blocks(sb, f) : right_blocks(sb, f)) {
            sb.emit(f, b, out, tiles);
            blocks.emplace_back(f, std::move(b));
        }
    }
    out.tas.name = "ladder-sim-tau" + std::to_string(tau) + "-to-" + std::to_string(tau_prime);
    out.tas.tiles = TileSet(std::move(tiles));
    out.tas.temperature = tau_prime;

    out.representation = RepresentationFunction(2);
    for (const auto& [f, b] : blocks) {
        const std::string base = std::string(1, family_letter(f)) + "." + b.name;
        const TileSet& ts = out.tas.tiles;
        auto cell = [&](const char* slot, Vec2 p) {
            return Cell{static_cast<std::int16_t>(p.x), static_cast<std::int16_t>(p.y), ts.id(base + "." + slot)};
        };
        Cell tl = cell("TL", kTL), tr = cell("TR", kTR), bl = cell("BL", kBL), br = cell("BR", kBR);
        TileId target = out.simulated.tiles.id(tile_name(b.role));
        out.representation.add({tl, tr, bl, br}, target);
        out.representation.add({tl, tr}, target);
        out.representation.add({tl, tr, bl}, target);
        out.representation.add({tl, tr, br}, target);
    }
    return out;
}

std::vector<Family> rung_types(const SimHalfLadderSpec& spec) {
    std::vector<Family> out;
    for (int r : spec.shape.rungs) out.push_back(spec.special && *spec.special == r ? special_rung_of(spec.family)
                                                                                     : spec.family);
    return out;
}

std::vector<Family> sim_rung_types(const SimLadderSystem& sl, const Supertile& s) {
    std::vector<std::pair<int, Family>> rungs;
    for (const Cell& c : s.cells()) {
        auto it = sl.family.find(sl.tas.tiles[c.tile].name);
        if (it == sl.family.end()) continue;
        const SimTileInfo& info = it->second;
        if (info.role != LadderRole::RungA1 && info.role != LadderRole::RungB1) continue;
        if (info.offset != Vec2{0, 0}) continue;
        rungs.push_back({-c.y, info.special_rung ? special_rung_of(info.family) : info.family});
    }
    std::sort(rungs.begin(), rungs.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Family> out;
    for (const auto& r : rungs) out.push_back(r.second);
    return out;
}

Supertile build_sim_half_ladder(const SimLadderSystem& sl, const SimHalfLadderSpec& spec) {
    const bool left = spec.shape.side == LadderSide::Left;
    if (left != is_left_family(spec.family))
        throw InputError(std::string("family ") + family_letter(spec.family) + " builds " +
                         (is_left_family(spec.family) ? "left" : "right") + " half-ladders");
    auto cells = half_ladder_cells(spec.shape);
    if (spec.special && (*spec.special < 0 || *spec.special >= spec.shape.height))
        throw InputError("special base index outside the backbone");
    const int special_y = spec.special ? 2 * spec.shape.height - 2 - 2 * *spec.special : 0;
    std::vector<Cell> out;
    const std::string fam(1, family_letter(spec.family));
    for (const LadderCell& c : cells) {
        std::string name = tile_name(c.role);
        const bool backbone = c.x == (left ? 0 : 2);
        const bool special_here = spec.special && c.index == *spec.special;
        if (backbone) {
            if (special_here)
                name += "s";
            else if (spec.special)
                name += c.y > special_y ? "t" : "b";
            else
                name += spec.bottom_set ? "b" : "t";
        } else if (special_here) {
            name += "s";
        }
        for (auto [slot, p] : {std::pair{"TL", kTL}, std::pair{"TR", kTR}, std::pair{"BL", kBL}, std::pair{"BR", kBR}})
            out.push_back({static_cast<std::int16_t>(2 * c.x + p.x), static_cast<std::int16_t>(2 * c.y + p.y),
                           sl.tas.tiles.id(fam + "." + name + "." + slot)});
    }
    return canonicalize_cells(std::move(out));
}

int rung_seam_strength(Family left_family, const std::vector<Family>& left_rungs, Family right_family,
                       const std::vector<Family>& right_rungs, int tau, int tau_prime) {
    if (left_rungs.size() != right_rungs.size())
        throw InputError("rung lists differ in length (" + std::to_string(left_rungs.size()) + " vs " +
                         std::to_string(right_rungs.size()) + ")");
    auto check = [](Family fam, const std::vector<Family>& rungs) {
        for (Family r : rungs)
            if (r != fam && r != special_rung_of(fam))
                throw InputError(std::string("rung type ") + family_letter(r) + " cannot occur on a " +
                                 family_letter(fam) + " half-ladder");
    };
    check(left_family, left_rungs);
    check(right_family, right_rungs);
    int total = 0;
    for (std::size_t i = 0; i < left_rungs.size(); ++i)
        total += left_rungs[i] == right_rungs[i] ? tau_prime - tau + 1 : 1;
    return total;
}

}  // namespace ham
