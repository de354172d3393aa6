#pragma once

#include "ham/core.hpp"

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace ham {

/**
 * An m-block representation function: maps partial m x m patterns of
 * simulator tiles to simulated tiles. Patterns are positional (not
 * translated); anything not in the table represents nothing.
 */
class RepresentationFunction {
public:
    struct Entry {
        std::vector<Cell> pattern;  // 0 <= x, y < scale, sorted
        TileId maps_to = 0;
    };

    RepresentationFunction() = default;
    explicit RepresentationFunction(int scale);

    int scale() const { return scale_; }
    const std::vector<Entry>& entries() const { return entries_; }

    /// Throws InputError on out-of-range cells, empty or duplicate patterns.
    void add(std::vector<Cell> pattern, TileId maps_to);
    std::optional<TileId> lookup(const std::vector<Cell>& pattern) const;

    /// Patterns of scale <= 2 pack into one word, 16 bits per slot
    /// (slot y*scale + x holds tile id + 1).
    bool packed() const { return packed_ok_; }
    std::optional<TileId> lookup_packed(std::uint64_t key) const {
        auto it = packed_.find(key);
        if (it == packed_.end()) return std::nullopt;
        return it->second;
    }

    /// Scale-1 table mapping simulator tile i to simulated tile table[i].
    static RepresentationFunction bijection(const std::vector<TileId>& table);

private:
    std::uint64_t key(const std::vector<Cell>& pattern) const;

    int scale_ = 1;
    std::vector<Entry> entries_;
    std::unordered_multimap<std::uint64_t, std::uint32_t> index_;
    std::unordered_map<std::uint64_t, TileId> packed_;
    bool packed_ok_ = false;
};

/// Result of cutting an assembly into blocks with a given grid phase.
struct BlockMap {
    Assembly image;                 // simulated tiles at block coordinates
    std::vector<Vec2> unmapped;     // nonempty blocks with no table entry
    std::size_t nonempty_blocks = 0;
};

/// Blocks are [m*bx - phase.x, m*bx - phase.x + m) and likewise in y.
BlockMap map_blocks(const RepresentationFunction& rep, const Assembly& a, Vec2 phase = {0, 0});

/// A nonempty block of a phase cut with its packed pattern; tile is -1 when
/// the pattern maps to nothing. Requires a packed representation.
struct PackedBlock {
    int bx = 0, by = 0;
    std::uint64_t key = 0;
    int tile = -1;
};

/// Blocks in row-major order (by, then bx).
std::vector<PackedBlock> packed_blocks(const RepresentationFunction& rep, const Assembly& a, Vec2 phase);

/// R* with origin-aligned blocks. nullopt if some unmapped nonempty block
/// is not legal fuzz (see check_clean_mapping).
std::optional<Assembly> apply_rep(const RepresentationFunction& rep, const Assembly& a);

struct CleanResult {
    bool clean = true;
    std::optional<Vec2> witness;  // block coordinate of diagonal or detached fuzz
};

/// Clean iff every nonempty block maps, or is N/S/E/W adjacent to a mapped
/// block, or there is at most one nonempty block.
CleanResult check_clean_mapping(const RepresentationFunction& rep, const Assembly& a, Vec2 phase = {0, 0});

/**
 * R~ for a canonical supertile. The grid phase is the one mapping the most
 * tiles (ties: smallest y then x), since canonical form forgets where the
 * simulator grid lay.
 */
struct SupertileImage {
    std::optional<Supertile> image;  // nullopt: represents nothing
    Vec2 phase;
    Vec2 offset;  // block coordinate of the image's canonical origin
    bool clean = true;
    std::optional<Vec2> fuzz_witness;
};

SupertileImage represent(const RepresentationFunction& rep, const Supertile& s);

}  // namespace ham
