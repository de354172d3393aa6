#include "ham/engine.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace ham {

std::vector<ExposedGlue> exposed_glues(const Supertile& s, const TileSet& tiles) {
    std::vector<ExposedGlue> out;
    const auto& cells = s.cells();
    const Assembly& a = s.canonical();
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const Cell& c = cells[i];
        for (Side side : kSides) {
            int label = tiles.label_id(c.tile, side);
            if (label < 0) continue;
            if (a.at(c.x + dx(side), c.y + dy(side))) continue;
            out.push_back({static_cast<int>(i), side, label});
        }
    }
    return out;
}

PlacementGrid::PlacementGrid(const Supertile& s, const TileSet& tiles) : s_(&s), tiles_(&tiles) {
    for (const Cell& c : s.cells()) {
        w_ = std::max(w_, c.x + 1);
        h_ = std::max(h_, c.y + 1);
    }
    grid_.assign(static_cast<std::size_t>(w_ + 4) * (h_ + 4), -1);
    for (const Cell& c : s.cells()) grid_[(c.y + 2) * (w_ + 4) + c.x + 2] = c.tile;
}

PlacementGrid::Probe PlacementGrid::probe(const Supertile& b, int tx, int ty) const {
    Probe p;
    const int stride = w_ + 4;
    const int step[4] = {stride, 1, -stride, -1};  // N E S W
    for (const Cell& c : b.cells()) {
        int x = c.x + tx, y = c.y + ty;
        if (x < -1 || y < -1 || x > w_ || y > h_) continue;
        const int* g = grid_.data() + (y + 2) * stride + x + 2;
        if (*g >= 0) {
            p.overlap = true;
            p.seam = 0;
            return p;
        }
        for (int k = 0; k < 4; ++k) {
            int o = g[step[k]];
            if (o >= 0) p.seam += tiles_->bond(c.tile, static_cast<Side>(k), static_cast<TileId>(o));
        }
    }
    return p;
}

std::vector<Vec2> candidate_translations(const Supertile& a, const std::vector<ExposedGlue>& ea,
                                         const Supertile& b, const std::vector<ExposedGlue>& eb) {
    std::vector<Vec2> out;
    for (const ExposedGlue& ga : ea) {
        const Cell& ca = a.cells()[ga.cell];
        for (const ExposedGlue& gb : eb) {
            if (gb.label != ga.label || gb.side != opposite(ga.side)) continue;
            const Cell& cb = b.cells()[gb.cell];
            out.push_back({ca.x + dx(ga.side) - cb.x, ca.y + dy(ga.side) - cb.y});
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

Supertile merged(const Supertile& a, const Supertile& b, int tx, int ty) {
    std::vector<Cell> cells = a.cells();
    cells.reserve(a.size() + b.size());
    for (const Cell& c : b.cells())
        cells.push_back({static_cast<std::int16_t>(c.x + tx), static_cast<std::int16_t>(c.y + ty), c.tile});
    return canonicalize_cells(std::move(cells));
}

}  // namespace

CombinationResult combine(const Supertile& a, const Supertile& b, const TileSet& tiles, int tau) {
    CombinationResult out;
    const bool operands_stable = is_stable(a.canonical(), tiles, tau) && is_stable(b.canonical(), tiles, tau);
    auto ea = exposed_glues(a, tiles);
    auto eb = exposed_glues(b, tiles);
    PlacementGrid grid(a, tiles);
    std::set<Supertile> seen;
    for (Vec2 t : candidate_translations(a, ea, b, eb)) {
        auto p = grid.probe(b, t.x, t.y);
        if (p.overlap) continue;
        Supertile r = merged(a, b, t.x, t.y);
        bool stable = operands_stable ? p.seam >= tau : is_stable(r.canonical(), tiles, tau);
        if (!stable) continue;
        Attachment att;
        att.translation = t;
        att.seam_strength = p.seam;
        for (const Cell& c : b.cells()) {
            int x = c.x + t.x, y = c.y + t.y;
            for (Side side : kSides) {
                int o = grid.occupant(x + dx(side), y + dy(side));
                if (o < 0) continue;
                int w = tiles.bond(c.tile, side, static_cast<TileId>(o));
                if (w <= 0) continue;
                att.contacts.push_back({{x + dx(side), y + dy(side)},
                                        {x, y},
                                        tiles.label_name(tiles.label_id(c.tile, side)),
                                        w});
            }
        }
        att.result = r;
        seen.insert(r);
        out.attachments.push_back(std::move(att));
    }
    out.results.assign(seen.begin(), seen.end());
    return out;
}

void PartnerIndex::add(std::uint32_t item, const std::vector<ExposedGlue>& glues) {
    for (const ExposedGlue& g : glues) {
        std::uint64_t key = (static_cast<std::uint64_t>(g.label) << 2) | static_cast<std::uint64_t>(g.side);
        map_[key].push_back({item, static_cast<std::uint16_t>(g.cell)});
    }
}

const std::vector<PartnerIndex::Entry>& PartnerIndex::lookup(int label, Side side) const {
    static const std::vector<Entry> none;
    std::uint64_t key = (static_cast<std::uint64_t>(label) << 2) | static_cast<std::uint64_t>(side);
    auto it = map_.find(key);
    return it == map_.end() ? none : it->second;
}

std::optional<std::uint32_t> ProducibleSet::find(const Supertile& s) const {
    auto [lo, hi] = by_hash_.equal_range(s.hash());
    for (auto it = lo; it != hi; ++it)
        if (items[it->second] == s) return it->second;
    return std::nullopt;
}

std::pair<std::uint32_t, bool> ProducibleSet::insert(Supertile s, Witness w) {
    if (auto idx = find(s)) return {*idx, false};
    auto idx = static_cast<std::uint32_t>(items.size());
    by_hash_.emplace(s.hash(), idx);
    items.push_back(std::move(s));
    witnesses.push_back(w);
    return {idx, true};
}

std::vector<std::uint32_t> ProducibleSet::sorted_order() const {
    std::vector<std::uint32_t> order(items.size());
    std::iota(order.begin(), order.end(), 0u);
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) { return items[a] < items[b]; });
    return order;
}

ProducibleSet enumerate_producibles(const Tas& sys, int max_size) {
    EnumerateOptions opts;
    opts.max_size = max_size;
    return enumerate_producibles(sys, opts);
}

ProducibleSet enumerate_producibles(const Tas& sys, const EnumerateOptions& opts) {
    const TileSet& tiles = sys.tiles;
    const int n_max = opts.max_size;
    if (n_max < 1) throw InputError("size bound must be positive");
    ProducibleSet prods;
    prods.bound = n_max;
    prods.temperature = sys.temperature;
    for (const Supertile& s : sys.initial_supertiles()) {
        if (static_cast<int>(s.size()) > n_max)
            throw InputError("size bound " + std::to_string(n_max) + " is smaller than an initial supertile of size " +
                             std::to_string(s.size()));
        prods.insert(s, Witness{});
    }

    // Partners bucketed by exposed glue and by size so that pairs exceeding
    // the bound are never visited.
    struct Bucketed {
        std::vector<std::vector<PartnerIndex::Entry>> by_size;
    };
    std::unordered_map<std::uint64_t, Bucketed> index;
    auto key_of = [](int label, Side side) {
        return (static_cast<std::uint64_t>(label) << 2) | static_cast<std::uint64_t>(side);
    };

    std::vector<std::pair<std::uint32_t, Vec2>> cands;
    for (std::uint32_t i = 0; i < prods.items.size(); ++i) {
        // copy: items may reallocate while we append results
        const Supertile a = prods.items[i];
        const int size_a = static_cast<int>(a.size());
        auto ea = exposed_glues(a, tiles);
        for (const ExposedGlue& g : ea) {
            auto& b = index[key_of(g.label, g.side)].by_size;
            if (static_cast<int>(b.size()) <= size_a) b.resize(size_a + 1);
            b[size_a].push_back({i, static_cast<std::uint16_t>(g.cell)});
        }
        if (size_a >= n_max) continue;
        PlacementGrid grid(a, tiles);
        cands.clear();
        for (const ExposedGlue& g : ea) {
            auto it = index.find(key_of(g.label, opposite(g.side)));
            if (it == index.end()) continue;
            const auto& buckets = it->second.by_size;
            const Cell& ca = a.cells()[g.cell];
            int limit = std::min<int>(n_max - size_a, static_cast<int>(buckets.size()) - 1);
            for (int sz = 1; sz <= limit; ++sz) {
                for (const auto& e : buckets[sz]) {
                    const Cell& cb = prods.items[e.item].cells()[e.cell];
                    cands.push_back({e.item, {ca.x + dx(g.side) - cb.x, ca.y + dy(g.side) - cb.y}});
                }
            }
        }
        std::sort(cands.begin(), cands.end(), [](const auto& l, const auto& r) {
            return l.first != r.first ? l.first < r.first : l.second < r.second;
        });
        cands.erase(std::unique(cands.begin(), cands.end(),
                                [](const auto& l, const auto& r) { return l.first == r.first && l.second == r.second; }),
                    cands.end());
        for (const auto& [j, t] : cands) {
            const Supertile& b = prods.items[j];
            auto p = grid.probe(b, t.x, t.y);
            if (p.overlap || p.seam < sys.temperature) continue;
            Supertile r = merged(a, b, t.x, t.y);
            auto [idx, fresh] = prods.insert(std::move(r), Witness{static_cast<int>(i), static_cast<int>(j), t});
            if (fresh && opts.max_items && prods.items.size() > opts.max_items)
                throw InputError("producible set exceeds " + std::to_string(opts.max_items) + " supertiles");
            if (opts.on_combine) opts.on_combine(CombineEvent{i, j, t, idx});
        }
    }
    return prods;
}

bool combines_with_any(const Supertile& s, const std::vector<ExposedGlue>& es, const ProducibleSet& prods,
                       const PartnerIndex& index, const TileSet& tiles, int tau) {
    PlacementGrid grid(s, tiles);
    for (const ExposedGlue& g : es) {
        const Cell& cs = s.cells()[g.cell];
        for (const auto& e : index.lookup(g.label, opposite(g.side))) {
            const Supertile& b = prods.items[e.item];
            const Cell& cb = b.cells()[e.cell];
            auto p = grid.probe(b, cs.x + dx(g.side) - cb.x, cs.y + dy(g.side) - cb.y);
            if (!p.overlap && p.seam >= tau) return true;
        }
    }
    return false;
}

bool is_terminal(const Supertile& s, const ProducibleSet& prods, const Tas& sys) {
    if (!prods.contains(s)) throw InputError("supertile is not in the producible set");
    PartnerIndex index;
    for (std::uint32_t i = 0; i < prods.items.size(); ++i) index.add(i, exposed_glues(prods.items[i], sys.tiles));
    return !combines_with_any(s, exposed_glues(s, sys.tiles), prods, index, sys.tiles, sys.temperature);
}

std::vector<std::uint32_t> terminal_members(const ProducibleSet& prods, const Tas& sys) {
    std::vector<std::vector<ExposedGlue>> exposed(prods.items.size());
    PartnerIndex index;
    for (std::uint32_t i = 0; i < prods.items.size(); ++i) {
        exposed[i] = exposed_glues(prods.items[i], sys.tiles);
        index.add(i, exposed[i]);
    }
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 0; i < prods.items.size(); ++i)
        if (!combines_with_any(prods.items[i], exposed[i], prods, index, sys.tiles, sys.temperature)) out.push_back(i);
    return out;
}

}  // namespace ham
