#include "ham/representation.hpp"

#include <algorithm>
#include <set>

namespace ham {

RepresentationFunction::RepresentationFunction(int scale) : scale_(scale), packed_ok_(scale <= 2) {
    if (scale < 1) throw InputError("representation scale must be >= 1");
}

std::uint64_t RepresentationFunction::key(const std::vector<Cell>& pattern) const {
    std::uint64_t h = 0x9e3779b97f4a7c15ull;
    for (const Cell& c : pattern) {
        h ^= (static_cast<std::uint64_t>(c.y * scale_ + c.x) << 16) | c.tile;
        h *= 0xff51afd7ed558ccdull;
        h ^= h >> 33;
    }
    return h;
}

void RepresentationFunction::add(std::vector<Cell> pattern, TileId maps_to) {
    if (pattern.empty()) throw InputError("empty block pattern in representation table");
    for (const Cell& c : pattern)
        if (c.x < 0 || c.y < 0 || c.x >= scale_ || c.y >= scale_)
            throw InputError("block pattern cell (" + std::to_string(c.x) + ", " + std::to_string(c.y) +
                             ") outside a " + std::to_string(scale_) + "-block");
    std::sort(pattern.begin(), pattern.end(), cell_less);
    for (std::size_t i = 1; i < pattern.size(); ++i)
        if (pattern[i].x == pattern[i - 1].x && pattern[i].y == pattern[i - 1].y)
            throw InputError("block pattern places two tiles in one cell");
    if (lookup(pattern)) throw InputError("duplicate block pattern in representation table");
    index_.emplace(key(pattern), static_cast<std::uint32_t>(entries_.size()));
    if (packed_ok_) {
        std::uint64_t k = 0;
        for (const Cell& c : pattern) {
            if (c.tile == 0xffff) packed_ok_ = false;
            k |= static_cast<std::uint64_t>(c.tile + 1) << (16 * (c.y * scale_ + c.x));
        }
        packed_.emplace(k, maps_to);
    }
    entries_.push_back({std::move(pattern), maps_to});
}

std::optional<TileId> RepresentationFunction::lookup(const std::vector<Cell>& pattern) const {
    auto [lo, hi] = index_.equal_range(key(pattern));
    for (auto it = lo; it != hi; ++it)
        if (entries_[it->second].pattern == pattern) return entries_[it->second].maps_to;
    return std::nullopt;
}

RepresentationFunction RepresentationFunction::bijection(const std::vector<TileId>& table) {
    RepresentationFunction rep(1);
    for (std::size_t i = 0; i < table.size(); ++i) rep.add({Cell{0, 0, static_cast<TileId>(i)}}, table[i]);
    return rep;
}

namespace {

int floor_div(int a, int m) { return a >= 0 ? a / m : -((-a + m - 1) / m); }

}  // namespace

namespace {

BlockMap map_blocks_general(const RepresentationFunction& rep, const Assembly& a, Vec2 phase) {
    const int m = rep.scale();
    struct Placed {
        int by, bx;
        Cell local;
    };
    std::vector<Placed> cells;
    cells.reserve(a.size());
    for (const Cell& c : a.cells()) {
        int x = c.x + phase.x, y = c.y + phase.y;
        int bx = floor_div(x, m), by = floor_div(y, m);
        cells.push_back({by, bx, {static_cast<std::int16_t>(x - bx * m), static_cast<std::int16_t>(y - by * m), c.tile}});
    }
    std::sort(cells.begin(), cells.end(), [](const Placed& l, const Placed& r) {
        if (l.by != r.by) return l.by < r.by;
        if (l.bx != r.bx) return l.bx < r.bx;
        return cell_less(l.local, r.local);
    });
    BlockMap out;
    std::vector<Cell> image, pattern;
    for (std::size_t i = 0; i < cells.size();) {
        std::size_t j = i;
        pattern.clear();
        while (j < cells.size() && cells[j].by == cells[i].by && cells[j].bx == cells[i].bx)
            pattern.push_back(cells[j++].local);
        ++out.nonempty_blocks;
        if (auto t = rep.lookup(pattern))
            image.push_back({static_cast<std::int16_t>(cells[i].bx), static_cast<std::int16_t>(cells[i].by), *t});
        else
            out.unmapped.push_back({cells[i].bx, cells[i].by});
        i = j;
    }
    out.image = Assembly(std::move(image));
    return out;
}


// Calls f(bx, by, key, tile-or-nullopt) for every nonempty block, by rows then
// columns. Canonical cells are sorted by row, so block rows are contiguous.
template <class F>
void scan_packed(const RepresentationFunction& rep, const Assembly& a, Vec2 phase, F&& f) {
    const int m = rep.scale();
    const auto& cells = a.cells();
    if (cells.empty()) return;
    int lo = cells.front().x, hi = lo;
    for (const Cell& c : cells) {
        lo = std::min<int>(lo, c.x);
        hi = std::max<int>(hi, c.x);
    }
    const int b0 = floor_div(lo + phase.x, m);
    const int w = floor_div(hi + phase.x, m) - b0 + 1;
    thread_local std::vector<std::uint64_t> keys;
    thread_local std::vector<int> touched;
    keys.assign(w, 0);
    for (std::size_t i = 0; i < cells.size();) {
        const int by = floor_div(cells[i].y + phase.y, m);
        touched.clear();
        for (; i < cells.size() && floor_div(cells[i].y + phase.y, m) == by; ++i) {
            const Cell& c = cells[i];
            int x = c.x + phase.x, y = c.y + phase.y;
            int bx = floor_div(x, m);
            int slot = (y - by * m) * m + (x - bx * m);
            auto& k = keys[bx - b0];
            if (!k) touched.push_back(bx - b0);
            k |= static_cast<std::uint64_t>(c.tile + 1) << (16 * slot);
        }
        std::sort(touched.begin(), touched.end());
        for (int t : touched) {
            f(t + b0, by, keys[t], rep.lookup_packed(keys[t]));
            keys[t] = 0;
        }
    }
}

}  // namespace

std::vector<PackedBlock> packed_blocks(const RepresentationFunction& rep, const Assembly& a, Vec2 phase) {
    if (!rep.packed()) throw InputError("packed blocks need a representation of scale at most 2");
    std::vector<PackedBlock> out;
    scan_packed(rep, a, phase, [&](int bx, int by, std::uint64_t key, std::optional<TileId> t) {
        out.push_back({bx, by, key, t ? static_cast<int>(*t) : -1});
    });
    return out;
}

BlockMap map_blocks(const RepresentationFunction& rep, const Assembly& a, Vec2 phase) {
    if (!rep.packed()) return map_blocks_general(rep, a, phase);
    BlockMap out;
    std::vector<Cell> image;
    scan_packed(rep, a, phase, [&](int bx, int by, std::uint64_t, std::optional<TileId> t) {
        ++out.nonempty_blocks;
        if (t)
            image.push_back({static_cast<std::int16_t>(bx), static_cast<std::int16_t>(by), *t});
        else
            out.unmapped.push_back({bx, by});
    });
    out.image = Assembly(std::move(image));
    return out;
}

namespace {

CleanResult clean_from(const BlockMap& bm) {
    CleanResult r;
    if (bm.nonempty_blocks <= 1) return r;
    for (Vec2 b : bm.unmapped) {
        bool near = false;
        for (Side s : kSides)
            if (bm.image.at(b.x + dx(s), b.y + dy(s))) near = true;
        if (!near) {
            r.clean = false;
            r.witness = b;
            return r;
        }
    }
    return r;
}

}  // namespace

std::optional<Assembly> apply_rep(const RepresentationFunction& rep, const Assembly& a) {
    BlockMap bm = map_blocks(rep, a);
    if (!clean_from(bm).clean) return std::nullopt;
    return bm.image;
}

CleanResult check_clean_mapping(const RepresentationFunction& rep, const Assembly& a, Vec2 phase) {
    return clean_from(map_blocks(rep, a, phase));
}

SupertileImage represent(const RepresentationFunction& rep, const Supertile& s) {
    const int m = rep.scale();
    SupertileImage best;
    std::size_t best_count = 0;
    bool have = false;
    BlockMap best_map;
    for (int py = 0; py < m; ++py) {
        for (int px = 0; px < m; ++px) {
            if (rep.packed()) {
                std::size_t count = 0;
                scan_packed(rep, s.canonical(), {px, py}, [&](int, int, std::uint64_t, std::optional<TileId> t) { count += t.has_value(); });
                if (!have || count > best_count) {
                    have = true;
                    best_count = count;
                    best.phase = {px, py};
                }
                continue;
            }
            BlockMap bm = map_blocks(rep, s.canonical(), {px, py});
            if (!have || bm.image.size() > best_count) {
                have = true;
                best_count = bm.image.size();
                best.phase = {px, py};
                best_map = std::move(bm);
            }
        }
    }
    if (rep.packed()) best_map = map_blocks(rep, s.canonical(), best.phase);
    CleanResult cr = clean_from(best_map);
    best.clean = cr.clean;
    best.fuzz_witness = cr.witness;
    if (!best_map.image.empty()) {
        best.offset = best_map.image.min_corner();
        best.image = canonicalize(best_map.image);
    }
    return best;
}

}  // namespace ham
