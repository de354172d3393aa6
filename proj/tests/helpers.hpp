#pragma once

#include "ham/core.hpp"

#include <initializer_list>
#include <string>
#include <utility>

namespace testing {

using ham::Glue;
using ham::Side;

struct SideGlue {
    Side side;
    std::string label;
    int strength;
};

inline ham::TileType tile(std::string name, std::initializer_list<SideGlue> glues) {
    ham::TileType t;
    t.name = std::move(name);
    for (const auto& g : glues) t.glue(g.side) = Glue{g.label, g.strength};
    return t;
}

inline ham::Supertile st(std::initializer_list<ham::Cell> cells) {
    return ham::canonicalize(ham::Assembly(std::vector<ham::Cell>(cells)));
}

}  // namespace testing
