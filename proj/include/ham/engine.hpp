#pragma once

#include "ham/core.hpp"

#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace ham {

/// One interacting glue pair across the seam of a combination, in the
/// coordinates of the first operand.
struct SeamContact {
    Vec2 a_cell;
    Vec2 b_cell;
    std::string label;
    int strength = 0;
};

struct Attachment {
    Vec2 translation;  // where b's canonical origin lands in a's canonical frame
    std::vector<SeamContact> contacts;
    int seam_strength = 0;
    Supertile result;
};

struct CombinationResult {
    std::vector<Supertile> results;  // distinct, sorted
    std::vector<Attachment> attachments;

    bool empty() const { return results.empty(); }
};

/// A glue on a tile side whose neighbour cell is unoccupied.
struct ExposedGlue {
    int cell = 0;
    Side side = Side::North;
    int label = -1;
};

std::vector<ExposedGlue> exposed_glues(const Supertile& s, const TileSet& tiles);

/**
 * Dense occupancy map over the bounding box of a canonical supertile, used
 * to test placements of a second operand in O(|b|).
 */
class PlacementGrid {
public:
    PlacementGrid(const Supertile& s, const TileSet& tiles);

    struct Probe {
        bool overlap = false;
        int seam = 0;
    };

    /// Overlap and total interacting strength if `b` is placed at (tx, ty).
    Probe probe(const Supertile& b, int tx, int ty) const;

    int width() const { return w_; }
    int height() const { return h_; }
    int occupant(int x, int y) const {
        if (x < 0 || y < 0 || x >= w_ || y >= h_) return -1;
        return grid_[(y + 2) * (w_ + 4) + x + 2];
    }

private:
    const Supertile* s_;
    const TileSet* tiles_;
    int w_ = 0;
    int h_ = 0;
    std::vector<int> grid_;  // tile id or -1, with a two-cell empty margin
};

/// Candidate translations of `b` relative to `a` at which at least one
/// abutting glue pair interacts; sorted and unique.
std::vector<Vec2> candidate_translations(const Supertile& a, const std::vector<ExposedGlue>& ea,
                                         const Supertile& b, const std::vector<ExposedGlue>& eb);

/**
 * All tau-stable supertiles obtainable by attaching b to a without overlap.
 *
 * When both operands are tau-stable the union is stable exactly when the
 * seam carries strength >= tau (any other cut splits a stable operand);
 * otherwise the union is checked with a full minimum cut.
 */
CombinationResult combine(const Supertile& a, const Supertile& b, const TileSet& tiles, int tau);

/// Lookup of supertiles by exposed glue, used to find binding partners.
class PartnerIndex {
public:
    struct Entry {
        std::uint32_t item;
        std::uint16_t cell;
    };

    void add(std::uint32_t item, const std::vector<ExposedGlue>& glues);
    /// Entries exposing `label` on side `side`.
    const std::vector<Entry>& lookup(int label, Side side) const;

private:
    std::unordered_map<std::uint64_t, std::vector<Entry>> map_;
};

struct Witness {
    int left = -1;  // -1: member of the initial state
    int right = -1;
    Vec2 translation;
};

/// Called for every successful combination found during enumeration.
struct CombineEvent {
    std::uint32_t left;
    std::uint32_t right;
    Vec2 translation;
    std::uint32_t result;
};

/**
 * Producible supertiles of a system up to a size bound, in discovery order.
 */
class ProducibleSet {
public:
    int bound = 0;
    int temperature = 0;
    std::vector<Supertile> items;
    std::vector<Witness> witnesses;

    std::size_t size() const { return items.size(); }
    std::optional<std::uint32_t> find(const Supertile& s) const;
    bool contains(const Supertile& s) const { return find(s).has_value(); }

    /// Insert if absent; returns (index, inserted).
    std::pair<std::uint32_t, bool> insert(Supertile s, Witness w);

    /// Items sorted by (size, cells) for deterministic listings.
    std::vector<std::uint32_t> sorted_order() const;

private:
    std::unordered_multimap<std::uint64_t, std::uint32_t> by_hash_;
};

struct EnumerateOptions {
    int max_size = 0;
    std::function<void(const CombineEvent&)> on_combine;
    std::size_t max_items = 0;  // 0 = unlimited; exceeding it throws
};

ProducibleSet enumerate_producibles(const Tas& sys, int max_size);
ProducibleSet enumerate_producibles(const Tas& sys, const EnumerateOptions& opts);

/// Whether `s` (exposing `es`) stably attaches to some member of `prods`
/// indexed by `index`; operands are assumed stable.
bool combines_with_any(const Supertile& s, const std::vector<ExposedGlue>& es, const ProducibleSet& prods,
                       const PartnerIndex& index, const TileSet& tiles, int tau);

/// Terminal up to the bound of `prods`: `s` combines with no member.
bool is_terminal(const Supertile& s, const ProducibleSet& prods, const Tas& sys);

/// Indices of all members terminal up to the bound.
std::vector<std::uint32_t> terminal_members(const ProducibleSet& prods, const Tas& sys);

}  // namespace ham
