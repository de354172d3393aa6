#include "ham/core.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>

namespace ham {

const char* side_name(Side s) {
    switch (s) {
    case Side::North: return "north";
    case Side::East: return "east";
    case Side::South: return "south";
    case Side::West: return "west";
    }
    return "?";
}

TileSet::TileSet(std::vector<TileType> tiles) : tiles_(std::move(tiles)) {
    if (tiles_.size() > std::numeric_limits<TileId>::max()) throw InputError("too many tile types");
    std::unordered_map<std::string, int> label_ids;
    std::vector<int> label_strength;
    label_.assign(tiles_.size() * 4, -1);
    strength_.assign(tiles_.size() * 4, 0);
    for (std::size_t i = 0; i < tiles_.size(); ++i) {
        const TileType& t = tiles_[i];
        if (t.name.empty()) throw InputError("tile type with empty name");
        if (!by_name_.emplace(t.name, static_cast<TileId>(i)).second)
            throw InputError("duplicate tile name '" + t.name + "'");
        for (Side s : kSides) {
            const auto& g = t.glue(s);
            if (!g) continue;
            if (g->label.empty()) throw InputError("tile '" + t.name + "' has a glue with empty label");
            if (g->strength < 0) throw InputError("tile '" + t.name + "' has a negative glue strength");
            auto [it, fresh] = label_ids.emplace(g->label, static_cast<int>(label_names_.size()));
            if (fresh) {
                label_names_.push_back(g->label);
                label_strength.push_back(g->strength);
            } else if (label_strength[it->second] != g->strength) {
                throw InputError("glue label '" + g->label + "' used with strengths " +
                                 std::to_string(label_strength[it->second]) + " and " +
                                 std::to_string(g->strength));
            }
            if (g->strength > 0) {
                label_[i * 4 + static_cast<int>(s)] = it->second;
                strength_[i * 4 + static_cast<int>(s)] = g->strength;
            }
        }
    }
}

std::optional<TileId> TileSet::find(const std::string& name) const {
    auto it = by_name_.find(name);
    if (it == by_name_.end()) return std::nullopt;
    return it->second;
}

TileId TileSet::id(const std::string& name) const {
    auto t = find(name);
    if (!t) throw InputError("unknown tile type '" + name + "'");
    return *t;
}

std::vector<int> TileSet::strengths() const {
    std::set<int> out;
    for (int s : strength_)
        if (s > 0) out.insert(s);
    return {out.begin(), out.end()};
}

Assembly::Assembly(std::vector<Cell> cells) : cells_(std::move(cells)) {
    std::sort(cells_.begin(), cells_.end(), cell_less);
    for (std::size_t i = 1; i < cells_.size(); ++i) {
        if (cells_[i].x == cells_[i - 1].x && cells_[i].y == cells_[i - 1].y)
            throw InputError("two tiles placed at (" + std::to_string(cells_[i].x) + ", " +
                             std::to_string(cells_[i].y) + ")");
    }
}

std::optional<TileId> Assembly::at(int x, int y) const {
    auto it = std::lower_bound(cells_.begin(), cells_.end(), Cell{static_cast<std::int16_t>(x),
                                                                   static_cast<std::int16_t>(y), 0},
                               cell_less);
    if (it != cells_.end() && it->x == x && it->y == y) return it->tile;
    return std::nullopt;
}

Assembly Assembly::translated(int tx, int ty) const {
    Assembly out;
    out.cells_ = cells_;
    for (Cell& c : out.cells_) {
        c.x = static_cast<std::int16_t>(c.x + tx);
        c.y = static_cast<std::int16_t>(c.y + ty);
    }
    return out;
}

Vec2 Assembly::min_corner() const {
    Vec2 m{std::numeric_limits<int>::max(), std::numeric_limits<int>::max()};
    for (const Cell& c : cells_) {
        m.x = std::min<int>(m.x, c.x);
        m.y = std::min<int>(m.y, c.y);
    }
    return m;
}

Vec2 Assembly::max_corner() const {
    Vec2 m{std::numeric_limits<int>::min(), std::numeric_limits<int>::min()};
    for (const Cell& c : cells_) {
        m.x = std::max<int>(m.x, c.x);
        m.y = std::max<int>(m.y, c.y);
    }
    return m;
}

bool operator<(const Supertile& a, const Supertile& b) {
    const auto& ca = a.cells();
    const auto& cb = b.cells();
    if (ca.size() != cb.size()) return ca.size() < cb.size();
    for (std::size_t i = 0; i < ca.size(); ++i) {
        if (ca[i].y != cb[i].y) return ca[i].y < cb[i].y;
        if (ca[i].x != cb[i].x) return ca[i].x < cb[i].x;
        if (ca[i].tile != cb[i].tile) return ca[i].tile < cb[i].tile;
    }
    return false;
}

namespace {

std::uint64_t hash_cells(const std::vector<Cell>& cells) {
    std::uint64_t h = 1469598103934665603ull;
    for (const Cell& c : cells) {
        std::uint64_t v = (static_cast<std::uint64_t>(static_cast<std::uint16_t>(c.x)) << 32) |
                          (static_cast<std::uint64_t>(static_cast<std::uint16_t>(c.y)) << 16) | c.tile;
        h ^= v;
        h *= 1099511628211ull;
        h ^= h >> 29;
    }
    return h;
}

}  // namespace

Supertile canonicalize_cells(std::vector<Cell> cells) {
    if (cells.empty()) throw InputError("cannot canonicalize an empty assembly");
    int mx = cells[0].x, my = cells[0].y;
    for (const Cell& c : cells) {
        mx = std::min<int>(mx, c.x);
        my = std::min<int>(my, c.y);
    }
    for (Cell& c : cells) {
        c.x = static_cast<std::int16_t>(c.x - mx);
        c.y = static_cast<std::int16_t>(c.y - my);
    }
    Supertile s;
    s.canonical_ = Assembly(std::move(cells));
    s.hash_ = hash_cells(s.canonical_.cells());
    return s;
}

Supertile canonicalize(const Assembly& a) { return canonicalize_cells(a.cells()); }

Supertile singleton(TileId t) { return canonicalize_cells({Cell{0, 0, t}}); }

BindingGraph binding_graph(const Assembly& a, const TileSet& tiles) {
    BindingGraph g;
    g.vertex_count = static_cast<int>(a.size());
    const auto& cells = a.cells();
    for (const Cell& c : cells)
        if (c.tile >= tiles.size()) throw InputError("assembly references unknown tile id");
    // cells are sorted by (y, x): east neighbours are adjacent in order, north
    // neighbours are found by binary search.
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const Cell& c = cells[i];
        if (i + 1 < cells.size() && cells[i + 1].y == c.y && cells[i + 1].x == c.x + 1) {
            int w = tiles.bond(c.tile, Side::East, cells[i + 1].tile);
            if (w > 0) g.edges.push_back({static_cast<int>(i), static_cast<int>(i + 1), w});
        }
        Cell probe{c.x, static_cast<std::int16_t>(c.y + 1), 0};
        auto it = std::lower_bound(cells.begin() + static_cast<long>(i), cells.end(), probe, cell_less);
        if (it != cells.end() && it->x == c.x && it->y == c.y + 1) {
            int w = tiles.bond(c.tile, Side::North, it->tile);
            if (w > 0) g.edges.push_back({static_cast<int>(i), static_cast<int>(it - cells.begin()), w});
        }
    }
    return g;
}

bool is_connected(const BindingGraph& g) {
    if (g.vertex_count <= 1) return true;
    std::vector<int> parent(g.vertex_count);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    int comps = g.vertex_count;
    for (const Edge& e : g.edges) {
        int a = find(e.u), b = find(e.v);
        if (a != b) {
            parent[a] = b;
            --comps;
        }
    }
    return comps == 1;
}

namespace {

struct CutResult {
    int weight = 0;
    std::vector<bool> side;
};

// Stoer-Wagner on a dense matrix; graphs here have at most a few hundred
// vertices.
CutResult stoer_wagner(const BindingGraph& g) {
    const int n = g.vertex_count;
    CutResult best{std::numeric_limits<int>::max(), {}};
    if (n < 2) return {0, {}};
    std::vector<long> w(static_cast<std::size_t>(n) * n, 0);
    for (const Edge& e : g.edges) {
        w[e.u * n + e.v] += e.weight;
        w[e.v * n + e.u] += e.weight;
    }
    std::vector<std::vector<int>> members(n);
    for (int i = 0; i < n; ++i) members[i] = {i};
    std::vector<int> active(n);
    std::iota(active.begin(), active.end(), 0);
    std::vector<long> key(n);
    std::vector<char> added(n);
    while (active.size() > 1) {
        std::fill(key.begin(), key.end(), 0);
        std::fill(added.begin(), added.end(), 0);
        int prev = -1, last = -1;
        for (std::size_t step = 0; step < active.size(); ++step) {
            int pick = -1;
            for (int v : active)
                if (!added[v] && (pick < 0 || key[v] > key[pick])) pick = v;
            added[pick] = 1;
            prev = last;
            last = pick;
            if (step + 1 == active.size()) {
                if (key[pick] < best.weight) {
                    best.weight = static_cast<int>(key[pick]);
                    best.side.assign(n, false);
                    for (int m : members[pick]) best.side[m] = true;
                }
            }
            for (int v : active)
                if (!added[v]) key[v] += w[pick * n + v];
        }
        // merge last into prev
        for (int m : members[last]) members[prev].push_back(m);
        for (int v : active) {
            w[prev * n + v] += w[last * n + v];
            w[v * n + prev] = w[prev * n + v];
        }
        w[prev * n + prev] = 0;
        active.erase(std::find(active.begin(), active.end(), last));
    }
    return best;
}

}  // namespace

int min_cut_weight(const BindingGraph& g) {
    if (g.vertex_count < 2) return 0;
    return stoer_wagner(g).weight;
}

std::vector<bool> min_cut_partition(const BindingGraph& g) {
    if (g.vertex_count < 2) return {};
    return stoer_wagner(g).side;
}

bool is_stable(const Assembly& a, const TileSet& tiles, int tau) {
    if (a.size() <= 1) return true;
    BindingGraph g = binding_graph(a, tiles);
    if (!is_connected(g)) return false;
    return min_cut_weight(g) >= tau;
}

std::vector<Supertile> Tas::initial_supertiles() const {
    std::vector<Supertile> out;
    if (initial.empty()) {
        for (std::size_t t = 0; t < tiles.size(); ++t) out.push_back(singleton(static_cast<TileId>(t)));
    } else {
        for (const auto& s : initial) out.push_back(s.supertile);
    }
    return out;
}

void Tas::validate() const {
    if (temperature < 1) throw InputError("temperature must be positive");
    for (const auto& s : initial) {
        if (s.supertile.size() == 0) throw InputError("empty initial supertile");
        if (s.count == 0 || s.count < kInfiniteCount) throw InputError("initial counts must be positive or infinite");
        for (const Cell& c : s.supertile.cells())
            if (c.tile >= tiles.size()) throw InputError("initial supertile references an unknown tile");
        BindingGraph g = binding_graph(s.supertile.canonical(), tiles);
        if (!is_connected(g))
            throw InputError("initial supertile " + describe(s.supertile, tiles) + " is not connected");
        if (s.supertile.size() > 1) {
            int cut = min_cut_weight(g);
            if (cut < temperature)
                throw InputError("initial supertile " + describe(s.supertile, tiles) + " has a cut of weight " +
                                 std::to_string(cut) + " < temperature " + std::to_string(temperature));
        }
    }
}

std::string describe(const Supertile& s, const TileSet& tiles) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (const Cell& c : s.cells()) {
        if (!first) os << ' ';
        first = false;
        os << '(' << c.x << ',' << c.y << "):" << tiles[c.tile].name;
    }
    os << '}';
    return os.str();
}

}  // namespace ham
