#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace ham {

/// Raised for malformed systems, assemblies and arguments.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class Side : std::uint8_t { North = 0, East = 1, South = 2, West = 3 };

constexpr std::array<Side, 4> kSides{Side::North, Side::East, Side::South, Side::West};

constexpr Side opposite(Side s) { return static_cast<Side>((static_cast<int>(s) + 2) % 4); }
constexpr int dx(Side s) { return s == Side::East ? 1 : (s == Side::West ? -1 : 0); }
constexpr int dy(Side s) { return s == Side::North ? 1 : (s == Side::South ? -1 : 0); }
const char* side_name(Side s);

struct Glue {
    std::string label;
    int strength = 0;

    friend bool operator==(const Glue&, const Glue&) = default;
};

struct TileType {
    std::string name;
    std::array<std::optional<Glue>, 4> glues;  // indexed by Side

    const std::optional<Glue>& glue(Side s) const { return glues[static_cast<int>(s)]; }
    std::optional<Glue>& glue(Side s) { return glues[static_cast<int>(s)]; }

    friend bool operator==(const TileType&, const TileType&) = default;
};

using TileId = std::uint16_t;

/**
 * A validated, immutable tile set.
 *
 * Glue labels are interned so that interaction lookups are table reads. Two
 * glues interact iff their labels are equal and their strength is positive;
 * the constructor rejects sets where one label carries two strengths, so the
 * strength of an interaction is well defined.
 */
class TileSet {
public:
    TileSet() = default;
    explicit TileSet(std::vector<TileType> tiles);

    std::size_t size() const { return tiles_.size(); }
    const TileType& operator[](TileId id) const { return tiles_[id]; }
    const std::vector<TileType>& tiles() const { return tiles_; }

    std::optional<TileId> find(const std::string& name) const;
    TileId id(const std::string& name) const;  // throws InputError

    /// Strength binding tile `b` placed on side `s` of tile `a`; 0 if none.
    int bond(TileId a, Side s, TileId b) const {
        int la = label_[a * 4 + static_cast<int>(s)];
        return la >= 0 && la == label_[b * 4 + static_cast<int>(opposite(s))]
                   ? strength_[a * 4 + static_cast<int>(s)]
                   : 0;
    }

    /// Interned id of the positive-strength glue on side `s`, or -1.
    int label_id(TileId a, Side s) const { return label_[a * 4 + static_cast<int>(s)]; }
    int strength(TileId a, Side s) const { return strength_[a * 4 + static_cast<int>(s)]; }
    std::size_t label_count() const { return label_names_.size(); }
    const std::string& label_name(int id) const { return label_names_[id]; }

    /// All positive strengths occurring in the set.
    std::vector<int> strengths() const;

    friend bool operator==(const TileSet& a, const TileSet& b) { return a.tiles_ == b.tiles_; }

private:
    std::vector<TileType> tiles_;
    std::unordered_map<std::string, TileId> by_name_;
    std::vector<int> label_;     // tile*4+side -> interned label or -1
    std::vector<int> strength_;  // tile*4+side -> strength (0 when absent)
    std::vector<std::string> label_names_;
};

struct Vec2 {
    int x = 0;
    int y = 0;

    friend bool operator==(const Vec2&, const Vec2&) = default;
    friend auto operator<=>(const Vec2&, const Vec2&) = default;
};

/// Coordinates are kept in 16 bits; assemblies are desk-sized.
struct Cell {
    std::int16_t x = 0;
    std::int16_t y = 0;
    TileId tile = 0;

    friend bool operator==(const Cell&, const Cell&) = default;
};

inline bool cell_less(const Cell& a, const Cell& b) {
    if (a.y != b.y) return a.y < b.y;
    if (a.x != b.x) return a.x < b.x;
    return a.tile < b.tile;
}

constexpr int kCoordLimit = 8000;

/**
 * A finite placement of tiles on Z^2, cells sorted by (y, x).
 */
class Assembly {
public:
    Assembly() = default;
    explicit Assembly(std::vector<Cell> cells);  // throws on duplicate coordinates

    const std::vector<Cell>& cells() const { return cells_; }
    std::size_t size() const { return cells_.size(); }
    bool empty() const { return cells_.empty(); }

    std::optional<TileId> at(int x, int y) const;
    Assembly translated(int tx, int ty) const;
    Vec2 min_corner() const;
    Vec2 max_corner() const;

    friend bool operator==(const Assembly&, const Assembly&) = default;

private:
    std::vector<Cell> cells_;
};

/**
 * Translation class of an assembly, stored as the representative touching
 * both axes from the non-negative side.
 */
class Supertile {
public:
    Supertile() = default;

    const Assembly& canonical() const { return canonical_; }
    const std::vector<Cell>& cells() const { return canonical_.cells(); }
    std::size_t size() const { return canonical_.size(); }
    std::uint64_t hash() const { return hash_; }

    friend bool operator==(const Supertile& a, const Supertile& b) {
        return a.hash_ == b.hash_ && a.canonical_ == b.canonical_;
    }
    friend bool operator<(const Supertile& a, const Supertile& b);

private:
    friend Supertile canonicalize(const Assembly& a);
    friend Supertile canonicalize_cells(std::vector<Cell> cells);
    Assembly canonical_;
    std::uint64_t hash_ = 0;
};

struct SupertileHash {
    std::size_t operator()(const Supertile& s) const { return static_cast<std::size_t>(s.hash()); }
};

Supertile canonicalize(const Assembly& a);
/// Same as canonicalize but takes ownership of unsorted cells.
Supertile canonicalize_cells(std::vector<Cell> cells);

struct Edge {
    int u = 0;
    int v = 0;
    int weight = 0;
};

/// Grid graph over the cells of an assembly; vertex i is cells()[i].
struct BindingGraph {
    int vertex_count = 0;
    std::vector<Edge> edges;
};

BindingGraph binding_graph(const Assembly& a, const TileSet& tiles);

/// Global minimum cut by Stoer-Wagner; 0 for disconnected graphs.
int min_cut_weight(const BindingGraph& g);

/// Vertex partition achieving the minimum cut (true = side containing the
/// last merged vertex). Empty when the graph has fewer than two vertices.
std::vector<bool> min_cut_partition(const BindingGraph& g);

bool is_connected(const BindingGraph& g);
bool is_stable(const Assembly& a, const TileSet& tiles, int tau);

/// Sentinel count for the default infinite supply.
constexpr long kInfiniteCount = -1;

struct InitialSupertile {
    Supertile supertile;
    long count = kInfiniteCount;
};

/**
 * A two-handed tile assembly system. When `initial` is empty the default
 * state (one infinite supply of every singleton) is implied.
 */
struct Tas {
    std::string name;
    TileSet tiles;
    int temperature = 1;
    std::vector<InitialSupertile> initial;

    std::vector<Supertile> initial_supertiles() const;

    /// Checks tile references and stability of the initial state.
    void validate() const;
};

Supertile singleton(TileId t);

std::string describe(const Supertile& s, const TileSet& tiles);

}  // namespace ham
