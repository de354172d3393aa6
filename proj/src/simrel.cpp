#include "ham/simrel.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace ham {

const char* relation_name(Relation r) {
    switch (r) {
    case Relation::EquivalentProductions: return "equivalent-productions";
    case Relation::Follows: return "follows";
    case Relation::WeaklyModels: return "weakly-models";
    case Relation::StronglyModels: return "strongly-models";
    case Relation::CleanMapping: return "clean-mapping";
    }
    return "?";
}

const char* status_name(RelationStatus s) {
    switch (s) {
    case RelationStatus::NotChecked: return "not-checked";
    case RelationStatus::Verified: return "verified-at-bound";
    case RelationStatus::Violated: return "violated";
    }
    return "?";
}

RelationStatus SimCheckReport::status(Relation r) const {
    auto it = relations.find(r);
    return it == relations.end() ? RelationStatus::NotChecked : it->second;
}

bool SimCheckReport::ok() const {
    return std::none_of(relations.begin(), relations.end(),
                        [](const auto& kv) { return kv.second == RelationStatus::Violated; });
}

namespace {

int floor_div(int a, int m) { return a >= 0 ? a / m : -((-a + m - 1) / m); }

Supertile merged(const Supertile& a, const Supertile& b, Vec2 t) {
    std::vector<Cell> cells = a.cells();
    for (const Cell& c : b.cells())
        cells.push_back({static_cast<std::int16_t>(c.x + t.x), static_cast<std::int16_t>(c.y + t.y), c.tile});
    return canonicalize_cells(std::move(cells));
}

// Candidate translations of every item of `prods` against `s`, by glue.
std::vector<std::pair<std::uint32_t, Vec2>> partner_candidates(const Supertile& s,
                                                               const std::vector<ExposedGlue>& es,
                                                               const ProducibleSet& prods,
                                                               const PartnerIndex& index) {
    std::vector<std::pair<std::uint32_t, Vec2>> out;
    for (const ExposedGlue& g : es) {
        const Cell& cs = s.cells()[g.cell];
        for (const auto& e : index.lookup(g.label, opposite(g.side))) {
            const Cell& cb = prods.items[e.item].cells()[e.cell];
            out.push_back({e.item, {cs.x + dx(g.side) - cb.x, cs.y + dy(g.side) - cb.y}});
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) {
        return l.first != r.first ? l.first < r.first : l.second < r.second;
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

struct SimulationChecker::Impl {
    Tas sim;
    Tas simd;
    RepresentationFunction rep;
    SimCheckOptions opts;
    int m = 1, n = 0, nm = 0, cap = 0;
    SimCheckReport report;

    // simulator side
    ProducibleSet sp;
    std::vector<CombineEvent> events;
    std::vector<SupertileImage> info;
    std::vector<int> img;  // image id per simulator item, -1 for none
    ProducibleSet images;  // interned images of any size
    std::vector<std::vector<std::uint32_t>> pre;   // image id -> preimages, smallest first
    std::vector<std::vector<std::uint32_t>> mate_pre;  // fuzz-free preimages, largest first
    std::vector<std::vector<std::uint32_t>> grow;  // image-preserving successors
    std::vector<std::vector<int>> steps_to;        // images of one-step results, sorted
    std::vector<int> tile_rank;
    std::unique_ptr<PartnerIndex> s_index;
    std::vector<int> completion;
    std::vector<char> fuzz_free;
    struct PhaseCut {
        std::vector<PackedBlock> blocks;
        int mapped = 0;
    };
    std::vector<std::vector<PhaseCut>> cuts;  // per item and phase, filled on demand

    // simulated side
    ProducibleSet tp;
    PartnerIndex t_index;
    std::vector<std::vector<ExposedGlue>> t_exposed;
    std::vector<int> t_rank;
    std::unordered_map<Supertile, bool, SupertileHash> t_memo;
    std::unordered_set<Supertile, SupertileHash> t_initial;

    Impl(const Tas& simulator, const Tas& simulated, const RepresentationFunction& r, const SimCheckOptions& o)
        : sim(simulator), simd(simulated), rep(r), opts(o) {
        if (opts.max_size < 1) throw InputError("size bound must be positive");
        sim.validate();
        simd.validate();
        for (const auto& e : rep.entries()) {
            if (e.maps_to >= simd.tiles.size()) throw InputError("representation maps to an unknown tile");
            for (const Cell& c : e.pattern)
                if (c.tile >= sim.tiles.size()) throw InputError("representation pattern uses an unknown tile");
        }
        m = rep.scale();
        n = opts.max_size;
        nm = n * m * m;
        cap = opts.path_cap > 0 ? opts.path_cap : 4 * m * m;
        report.bound = n;
        report.simulator_bound = nm;
        report.path_cap = cap;
        report.scale = m;

        tp = enumerate_producibles(simd, n);
        t_exposed.resize(tp.size());
        for (std::uint32_t i = 0; i < tp.size(); ++i) {
            t_exposed[i] = exposed_glues(tp.items[i], simd.tiles);
            t_index.add(i, t_exposed[i]);
        }
        t_rank.assign(tp.size(), 0);
        auto t_order = tp.sorted_order();
        for (std::size_t k = 0; k < t_order.size(); ++k) t_rank[t_order[k]] = static_cast<int>(k);
        for (const Supertile& s : simd.initial_supertiles()) t_initial.insert(s);

        EnumerateOptions eo;
        eo.max_size = nm;
        eo.max_items = opts.max_simulator_items;
        eo.on_combine = [this](const CombineEvent& e) { events.push_back(e); };
        sp = enumerate_producibles(sim, eo);

        info.reserve(sp.size());
        img.assign(sp.size(), -1);
        for (std::uint32_t i = 0; i < sp.size(); ++i) {
            info.push_back(represent(rep, sp.items[i]));
            if (info.back().image) img[i] = static_cast<int>(images.insert(*info.back().image, Witness{}).first);
        }
        pre.resize(images.size());
        for (std::uint32_t i = 0; i < sp.size(); ++i)
            if (img[i] >= 0) pre[img[i]].push_back(i);

        std::vector<std::uint32_t> by_name(sim.tiles.size());
        std::iota(by_name.begin(), by_name.end(), 0u);
        std::sort(by_name.begin(), by_name.end(), [&](std::uint32_t a, std::uint32_t b) {
            return sim.tiles[static_cast<TileId>(a)].name < sim.tiles[static_cast<TileId>(b)].name;
        });
        tile_rank.assign(sim.tiles.size(), 0);
        for (std::size_t k = 0; k < by_name.size(); ++k) tile_rank[by_name[k]] = static_cast<int>(k);
        for (auto& p : pre) std::sort(p.begin(), p.end(), [&](auto a, auto b) { return preimage_less(a, b); });

        mate_pre.resize(images.size());
        fuzz_free.assign(sp.size(), 0);
        for (std::size_t k = 0; k < pre.size(); ++k) {
            for (std::uint32_t i : pre[k])
                if (map_blocks(rep, sp.items[i].canonical(), info[i].phase).unmapped.empty()) {
                    fuzz_free[i] = 1;
                    mate_pre[k].push_back(i);
                }
            std::stable_sort(mate_pre[k].begin(), mate_pre[k].end(),
                             [&](auto a, auto b) { return sp.items[a].size() > sp.items[b].size(); });
        }

        grow.resize(sp.size());
        steps_to.resize(sp.size());
        for (const CombineEvent& e : events) {
            if (img[e.result] >= 0) {
                steps_to[e.left].push_back(img[e.result]);
                steps_to[e.right].push_back(img[e.result]);
            }
            if (img[e.result] == img[e.left]) grow[e.left].push_back(e.result);
            if (img[e.result] == img[e.right] && e.right != e.left) grow[e.right].push_back(e.result);
        }
        for (auto& g : grow) {
            std::sort(g.begin(), g.end());
            g.erase(std::unique(g.begin(), g.end()), g.end());
        }
        for (auto& t : steps_to) {
            std::sort(t.begin(), t.end());
            t.erase(std::unique(t.begin(), t.end()), t.end());
        }

        report.simulator_producibles = sp.size();
        report.simulated_producibles = tp.size();
        report.simulator_steps = events.size();
        report.notes.push_back("simulated supertiles bounded by " + std::to_string(n) +
                               " tiles, simulator supertiles by " + std::to_string(nm));
        report.notes.push_back("growth searches capped at " + std::to_string(cap) + " steps");
        report.notes.push_back("terminality is terminal-up-to-bound on both sides");
    }

    // Smaller first, then by tile names in canonical cell order.
    bool preimage_less(std::uint32_t a, std::uint32_t b) const {
        const auto& ca = sp.items[a].cells();
        const auto& cb = sp.items[b].cells();
        if (ca.size() != cb.size()) return ca.size() < cb.size();
        for (std::size_t i = 0; i < ca.size(); ++i) {
            if (ca[i].y != cb[i].y) return ca[i].y < cb[i].y;
            if (ca[i].x != cb[i].x) return ca[i].x < cb[i].x;
            if (ca[i].tile != cb[i].tile) return tile_rank[ca[i].tile] < tile_rank[cb[i].tile];
        }
        return false;
    }

    RelationStatus finish(Relation r, bool ok) {
        auto st = ok ? RelationStatus::Verified : RelationStatus::Violated;
        report.relations[r] = st;
        return st;
    }

    int image_id(const Supertile& s) const {
        auto k = images.find(s);
        return k ? static_cast<int>(*k) : -1;
    }

    // -- simulated-side decisions ------------------------------------------

    /// Producibility in the simulated system. Within the bound this is a set
    /// lookup; above it, a supertile is accepted when some bridge of its
    /// binding graph splits it into two producible parts. That search is
    /// sound but does not try splits across cycles.
    bool t_producible(const Supertile& s) {
        if (static_cast<int>(s.size()) <= n) return tp.contains(s);
        if (auto it = t_memo.find(s); it != t_memo.end()) return it->second;
        bool ok = false;
        if (is_stable(s.canonical(), simd.tiles, simd.temperature)) {
            BindingGraph g = binding_graph(s.canonical(), simd.tiles);
            const int vc = g.vertex_count;
            for (std::size_t skip = 0; skip < g.edges.size() && !ok; ++skip) {
                std::vector<int> parent(vc);
                std::iota(parent.begin(), parent.end(), 0);
                auto find = [&](int v) {
                    while (parent[v] != v) v = parent[v] = parent[parent[v]];
                    return v;
                };
                int comps = vc;
                for (std::size_t k = 0; k < g.edges.size(); ++k) {
                    if (k == skip) continue;
                    int a = find(g.edges[k].u), b = find(g.edges[k].v);
                    if (a != b) {
                        parent[a] = b;
                        --comps;
                    }
                }
                if (comps != 2) continue;
                std::vector<Cell> left, right;
                int root = find(g.edges[skip].u);
                for (int v = 0; v < vc; ++v) (find(v) == root ? left : right).push_back(s.cells()[v]);
                ok = t_producible(canonicalize_cells(std::move(left))) &&
                     t_producible(canonicalize_cells(std::move(right)));
            }
        }
        t_memo.emplace(s, ok);
        return ok;
    }

    bool t_terminal(const Supertile& s) const {
        return !combines_with_any(s, exposed_glues(s, simd.tiles), tp, t_index, simd.tiles, simd.temperature);
    }

    /// A ->^{<=1} B in the simulated system: equal, or B is a stable union of
    /// A and a disjoint producible supertile.
    bool at_most_one_step(int ia, int ib) {
        if (ia == ib) return true;
        const Supertile& a = images.items[ia];
        const Supertile& b = images.items[ib];
        if (a.size() >= b.size()) return false;
        if (!is_stable(b.canonical(), simd.tiles, simd.temperature)) return false;
        const Cell& c0 = a.cells().front();
        for (const Cell& cb : b.cells()) {
            if (cb.tile != c0.tile) continue;
            int tx = cb.x - c0.x, ty = cb.y - c0.y;
            bool embeds = std::all_of(a.cells().begin(), a.cells().end(), [&](const Cell& c) {
                auto t = b.canonical().at(c.x + tx, c.y + ty);
                return t && *t == c.tile;
            });
            if (!embeds) continue;
            std::vector<Cell> rest;
            for (const Cell& c : b.cells())
                if (!a.canonical().at(c.x - tx, c.y - ty)) rest.push_back(c);
            if (t_producible(canonicalize_cells(std::move(rest)))) return true;
        }
        return false;
    }

    // -- simulator-side helpers -----------------------------------------------

    /// Image-preserving growth from `start` within the cap, breadth first,
    /// excluding `start` itself.
    std::vector<std::uint32_t> reach(std::uint32_t start) const {
        std::vector<std::uint32_t> out;
        std::unordered_set<std::uint32_t> seen{start};
        std::vector<std::uint32_t> frontier{start};
        for (int depth = 0; depth < cap && !frontier.empty(); ++depth) {
            std::vector<std::uint32_t> next;
            for (std::uint32_t u : frontier)
                for (std::uint32_t v : grow[u])
                    if (seen.insert(v).second) {
                        next.push_back(v);
                        out.push_back(v);
                    }
            frontier = std::move(next);
        }
        return out;
    }

    /// Translation of simulator item `b2` relative to `a2` that puts the
    /// image of b2 at offset `v` from the image of a2 on a common grid.
    Vec2 aligned(std::uint32_t a2, std::uint32_t b2, Vec2 v) const {
        const SupertileImage& ia = info[a2];
        const SupertileImage& ib = info[b2];
        return {ib.phase.x - ia.phase.x + m * (v.x + ia.offset.x - ib.offset.x),
                ib.phase.y - ia.phase.y + m * (v.y + ia.offset.y - ib.offset.y)};
    }

    /// Whether a supertile built from two simulator producibles represents
    /// image `gamma`.
    bool maps_to(const Supertile& s, int gamma) const {
        if (static_cast<int>(s.size()) <= nm) {
            auto k = sp.find(s);
            return k && img[*k] == gamma;
        }
        auto r = represent(rep, s);
        return r.image && *r.image == images.items[gamma];
    }

    const PhaseCut& cut(std::uint32_t i, int q) {
        if (cuts.empty()) cuts.resize(sp.size());
        auto& c = cuts[i];
        if (c.empty()) {
            c.resize(m * m);
            for (int k = 0; k < m * m; ++k) {
                c[k].blocks = packed_blocks(rep, sp.items[i].canonical(), {k % m, k / m});
                for (const auto& b : c[k].blocks) c[k].mapped += b.tile >= 0;
            }
        }
        return c[q];
    }

    /// maps_to(merged(a2, b2, u), gamma) from the block cuts of both
    /// operands, recomputing only blocks that receive cells from both. The
    /// phase is chosen as represent() does.
    bool merge_maps_to(std::uint32_t a2, std::uint32_t b2, Vec2 u, int gamma) {
        if (!rep.packed()) return maps_to(merged(sp.items[a2], sp.items[b2], u), gamma);
        const Supertile& g = images.items[gamma];
        const int sx = std::min(0, u.x), sy = std::min(0, u.y);
        auto md = [&](int v) { return ((v % m) + m) % m; };
        struct Frame {
            const PhaseCut* a;
            const PhaseCut* b;
            Vec2 ka, kb;  // block offsets into the result frame
        };
        auto frame = [&](int px, int py) {
            int ax = px - sx, ay = py - sy;
            int bx = u.x - sx + px, by = u.y - sy + py;
            Frame f;
            f.a = &cut(a2, md(ay) * m + md(ax));
            f.b = &cut(b2, md(by) * m + md(bx));
            f.ka = {floor_div(ax, m), floor_div(ay, m)};
            f.kb = {floor_div(bx, m), floor_div(by, m)};
            return f;
        };
        // visits shared blocks as (index in a, index in b, tile of union)
        auto shared = [&](const Frame& f, auto&& visit) {
            const auto& ab = f.a->blocks;
            for (std::size_t j = 0; j < f.b->blocks.size(); ++j) {
                const auto& b = f.b->blocks[j];
                int rx = b.bx + f.kb.x - f.ka.x, ry = b.by + f.kb.y - f.ka.y;  // in a's block frame
                auto it = std::lower_bound(ab.begin(), ab.end(), std::pair(ry, rx), [](const PackedBlock& p, auto key) {
                    return std::pair(p.by, p.bx) < key;
                });
                if (it == ab.end() || it->by != ry || it->bx != rx) continue;
                auto t = rep.lookup_packed(it->key | b.key);
                visit(static_cast<std::size_t>(it - ab.begin()), j, t ? static_cast<int>(*t) : -1);
            }
        };
        int best = -1, best_px = 0, best_py = 0;
        for (int py = 0; py < m; ++py)
            for (int px = 0; px < m; ++px) {
                Frame f = frame(px, py);
                int count = f.a->mapped + f.b->mapped;
                shared(f, [&](std::size_t i, std::size_t j, int t) {
                    count += (t >= 0) - (f.a->blocks[i].tile >= 0) - (f.b->blocks[j].tile >= 0);
                });
                if (count > best) {
                    best = count;
                    best_px = px;
                    best_py = py;
                }
            }
        if (best != static_cast<int>(g.size()) || best == 0) return false;
        Frame f = frame(best_px, best_py);
        std::vector<char> skip_a(f.a->blocks.size(), 0), skip_b(f.b->blocks.size(), 0);
        std::vector<Cell> cells;
        shared(f, [&](std::size_t i, std::size_t j, int t) {
            skip_a[i] = skip_b[j] = 1;
            if (t >= 0) {
                const auto& b = f.a->blocks[i];
                cells.push_back({static_cast<std::int16_t>(b.bx + f.ka.x), static_cast<std::int16_t>(b.by + f.ka.y),
                                 static_cast<TileId>(t)});
            }
        });
        for (std::size_t i = 0; i < f.a->blocks.size(); ++i) {
            const auto& b = f.a->blocks[i];
            if (!skip_a[i] && b.tile >= 0)
                cells.push_back({static_cast<std::int16_t>(b.bx + f.ka.x), static_cast<std::int16_t>(b.by + f.ka.y),
                                 static_cast<TileId>(b.tile)});
        }
        for (std::size_t j = 0; j < f.b->blocks.size(); ++j) {
            const auto& b = f.b->blocks[j];
            if (!skip_b[j] && b.tile >= 0)
                cells.push_back({static_cast<std::int16_t>(b.bx + f.kb.x), static_cast<std::int16_t>(b.by + f.kb.y),
                                 static_cast<TileId>(b.tile)});
        }
        return canonicalize_cells(std::move(cells)) == g;
    }

    PartnerIndex& simulator_index() {
        if (!s_index) {
            s_index = std::make_unique<PartnerIndex>();
            for (std::uint32_t i = 0; i < sp.size(); ++i) s_index->add(i, exposed_glues(sp.items[i], sim.tiles));
        }
        return *s_index;
    }

    void add_witness(SimWitness w) { report.witnesses.push_back(std::move(w)); }

    // -- relations ----------------------------------------------------------

    RelationStatus clean_mapping() {
        std::size_t bad = 0;
        std::optional<std::uint32_t> first;
        for (std::uint32_t i : sp.sorted_order()) {
            if (info[i].clean) continue;
            if (!first) first = i;
            ++bad;
        }
        if (first) {
            SimWitness w;
            w.relation = Relation::CleanMapping;
            w.kind = "diagonal-fuzz";
            w.simulator = {sp.items[*first]};
            if (info[*first].image) w.simulated = {*info[*first].image};
            w.block = info[*first].fuzz_witness;
            w.detail = std::to_string(bad) + " simulator producibles do not map cleanly";
            add_witness(std::move(w));
        }
        return finish(Relation::CleanMapping, !first);
    }

    RelationStatus equivalent_productions() {
        bool ok = true;
        auto fail = [&](std::string kind, std::vector<Supertile> simulator, std::vector<Supertile> simulated,
                        std::string detail) {
            ok = false;
            SimWitness w;
            w.relation = Relation::EquivalentProductions;
            w.kind = std::move(kind);
            w.simulator = std::move(simulator);
            w.simulated = std::move(simulated);
            w.detail = std::move(detail);
            add_witness(std::move(w));
        };

        std::vector<bool> hit(tp.size(), false);
        std::vector<std::uint32_t> image_order(images.size());
        std::iota(image_order.begin(), image_order.end(), 0u);
        std::sort(image_order.begin(), image_order.end(),
                  [&](auto a, auto b) { return images.items[a] < images.items[b]; });
        bool extra_reported = false;
        for (std::uint32_t k : image_order) {
            const Supertile& s = images.items[k];
            bool producible;
            if (static_cast<int>(s.size()) <= n) {
                auto t = tp.find(s);
                producible = t.has_value();
                if (t) hit[*t] = true;
            } else {
                producible = t_producible(s);
            }
            if (!producible && !extra_reported) {
                extra_reported = true;
                fail("extra-image", {sp.items[pre[k].front()]}, {s},
                     "a simulator producible represents a supertile the simulated system cannot produce");
            }
        }
        for (std::uint32_t t : tp.sorted_order()) {
            if (hit[t]) continue;
            fail("missing-image", {}, {tp.items[t]},
                 "no simulator producible within " + std::to_string(nm) + " tiles represents it");
            break;
        }

        // terminal-up-to-bound on both sides
        PartnerIndex& si = simulator_index();
        std::set<int> terminal_images;
        for (std::uint32_t i : sp.sorted_order()) {
            if (combines_with_any(sp.items[i], exposed_glues(sp.items[i], sim.tiles), sp, si, sim.tiles,
                                  sim.temperature))
                continue;
            if (img[i] < 0) continue;
            terminal_images.insert(img[i]);
            if (!t_terminal(images.items[img[i]])) {
                fail("terminal-mismatch", {sp.items[i]}, {images.items[img[i]]},
                     "terminal simulator supertile represents a non-terminal supertile");
                break;
            }
        }
        for (std::uint32_t t : terminal_members(tp, simd)) {
            int k = image_id(tp.items[t]);
            if (k < 0 || !terminal_images.count(k)) {
                fail("terminal-missing", {}, {tp.items[t]}, "no terminal simulator supertile represents it");
                break;
            }
        }

        bool clean = report.status(Relation::CleanMapping) == RelationStatus::NotChecked
                         ? clean_mapping() == RelationStatus::Verified
                         : report.status(Relation::CleanMapping) == RelationStatus::Verified;
        if (!clean) ok = false;
        return finish(Relation::EquivalentProductions, ok);
    }

    RelationStatus follows() {
        std::unordered_map<std::uint64_t, bool> memo;
        std::size_t bad = 0;
        std::optional<CombineEvent> first;
        for (const CombineEvent& e : events) {
            int ia = img[e.left], ix = img[e.right], ib = img[e.result];
            std::uint64_t key = (static_cast<std::uint64_t>(ia + 1) << 42) |
                                (static_cast<std::uint64_t>(ix + 1) << 21) | static_cast<std::uint64_t>(ib + 1);
            auto it = memo.find(key);
            bool ok;
            if (it != memo.end()) {
                ok = it->second;
            } else {
                // a source that represents nothing is judged through its
                // partner; two blank operands may only reveal an initial
                // simulated supertile
                if (ia >= 0)
                    ok = ib >= 0 && at_most_one_step(ia, ib);
                else if (ix >= 0)
                    ok = ib >= 0 && at_most_one_step(ix, ib);
                else
                    ok = ib < 0 || t_initial.count(images.items[ib]) > 0;
                memo.emplace(key, ok);
            }
            if (!ok) {
                ++bad;
                if (!first) first = e;
            }
        }
        if (first) {
            SimWitness w;
            w.relation = Relation::Follows;
            w.kind = "not-following";
            w.simulator = {sp.items[first->left], sp.items[first->right], sp.items[first->result]};
            for (std::uint32_t s : {first->left, first->result})
                if (img[s] >= 0) w.simulated.push_back(images.items[img[s]]);
            w.translation = first->translation;
            w.detail = std::to_string(bad) + " of " + std::to_string(events.size()) +
                       " simulator steps have no simulated counterpart of at most one step";
            add_witness(std::move(w));
        }
        return finish(Relation::Follows, !first);
    }

    struct TStep {
        std::uint32_t partner;
        Vec2 v;  // partner relative to the step source, simulated frame
    };

    /// Simulated combinations of `a` with bounded producibles, grouped by
    /// result (in order of first appearance).
    std::vector<std::pair<Supertile, std::vector<TStep>>> t_steps(std::uint32_t a, bool only_later) const {
        std::vector<std::pair<Supertile, std::vector<TStep>>> out;
        std::unordered_map<Supertile, std::size_t, SupertileHash> slot;
        const Supertile& sa = tp.items[a];
        PlacementGrid grid(sa, simd.tiles);
        for (const auto& [x, v] : partner_candidates(sa, t_exposed[a], tp, t_index)) {
            if (only_later && t_rank[x] < t_rank[a]) continue;
            auto p = grid.probe(tp.items[x], v.x, v.y);
            if (p.overlap || p.seam < simd.temperature) continue;
            Supertile g = merged(sa, tp.items[x], v);
            auto [it, fresh] = slot.emplace(g, out.size());
            if (fresh) out.push_back({std::move(g), {}});
            out[it->second].second.push_back({x, v});
        }
        return out;
    }

    bool fast_mate(std::uint32_t a2, const PlacementGrid& grid, const std::vector<TStep>& steps, int gamma) {
        for (const TStep& st : steps) {
            int ix = image_id(tp.items[st.partner]);
            if (ix < 0) continue;
            for (std::uint32_t x2 : mate_pre[ix]) {
                Vec2 u = aligned(a2, x2, st.v);
                auto p = grid.probe(sp.items[x2], u.x, u.y);
                if (p.overlap || p.seam < sim.temperature) continue;
                if (merge_maps_to(a2, x2, u, gamma)) return true;
            }
        }
        return false;
    }

    bool any_mate(std::uint32_t a2, int gamma) {
        const Supertile& sa = sp.items[a2];
        PlacementGrid grid(sa, sim.tiles);
        for (const auto& [y, u] : partner_candidates(sa, exposed_glues(sa, sim.tiles), sp, simulator_index())) {
            auto p = grid.probe(sp.items[y], u.x, u.y);
            if (p.overlap || p.seam < sim.temperature) continue;
            if (merge_maps_to(a2, y, u, gamma)) return true;
        }
        return false;
    }

    /// Cells of a1 lying in blocks that represent nothing.
    std::vector<bool> fuzz_mask(std::uint32_t a1) const {
        const Supertile& s = sp.items[a1];
        BlockMap bm = map_blocks(rep, s.canonical(), info[a1].phase);
        std::set<std::pair<int, int>> unmapped;
        for (Vec2 b : bm.unmapped) unmapped.insert({b.x, b.y});
        std::vector<bool> mask(s.size(), false);
        if (unmapped.empty()) return mask;
        Vec2 ph = info[a1].phase;
        for (std::size_t k = 0; k < s.size(); ++k) {
            const Cell& c = s.cells()[k];
            mask[k] = unmapped.count({floor_div(c.x + ph.x, m), floor_div(c.y + ph.y, m)}) > 0;
        }
        return mask;
    }

    /// Size of a1 once every represented block is complete.
    int completion_size(std::uint32_t a1) {
        if (completion.empty()) completion.assign(sp.size(), -1);
        if (completion[a1] >= 0) return completion[a1];
        auto mask = fuzz_mask(a1);
        int fuzz = static_cast<int>(std::count(mask.begin(), mask.end(), true));
        return completion[a1] = m * m * static_cast<int>(images.items[img[a1]].size()) + fuzz;
    }

    /// a1 without its unmapped blocks, when that is a producible with the
    /// same image.
    std::optional<std::uint32_t> trimmed(std::uint32_t a1) const {
        auto mask = fuzz_mask(a1);
        if (std::find(mask.begin(), mask.end(), true) == mask.end()) return std::nullopt;
        std::vector<Cell> keep;
        for (std::size_t k = 0; k < mask.size(); ++k)
            if (!mask[k]) keep.push_back(sp.items[a1].cells()[k]);
        if (keep.empty()) return std::nullopt;
        auto t = sp.find(canonicalize_cells(std::move(keep)));
        if (!t || img[*t] != img[a1]) return std::nullopt;
        return t;
    }

    bool any_grown(std::uint32_t a1, int gamma) {
        if (any_mate(a1, gamma)) return true;
        auto grown = reach(a1);
        return std::any_of(grown.begin(), grown.end(), [&](std::uint32_t a2) { return any_mate(a2, gamma); });
    }

    RelationStatus weakly_models() {
        std::size_t steps = 0, bad = 0, excused = 0;
        bool reported = false;
        for (std::uint32_t a : tp.sorted_order()) {
            int ia = image_id(tp.items[a]);
            if (ia < 0) continue;  // missing preimage is an equivalent-productions failure
            auto groups = t_steps(a, false);
            if (groups.empty()) continue;
            steps += groups.size();
            const std::size_t gn = groups.size();
            std::vector<int> gammas;
            for (auto& [g, st] : groups) gammas.push_back(static_cast<int>(images.insert(g, Witness{}).first));

            // mate[k] per preimage: it steps into a preimage of group k's
            // result, directly or after image-preserving growth. Growth
            // only enlarges, so larger preimages are settled first.
            const auto& pa = pre[ia];
            std::vector<std::uint32_t> order(pa.begin(), pa.end());
            std::stable_sort(order.begin(), order.end(),
                             [&](auto l, auto r) { return sp.items[l].size() > sp.items[r].size(); });
            std::unordered_map<std::uint32_t, std::vector<char>> mate;
            mate.reserve(order.size());
            for (std::uint32_t a1 : order) {
                std::vector<char> row(gn, 0);
                for (std::uint32_t g2 : grow[a1])
                    if (auto it = mate.find(g2); it != mate.end())
                        for (std::size_t k = 0; k < gn; ++k) row[k] |= it->second[k];
                const auto& known = steps_to[a1];
                std::optional<PlacementGrid> grid;
                for (std::size_t k = 0; k < gn; ++k) {
                    if (row[k]) continue;
                    if (std::binary_search(known.begin(), known.end(), gammas[k])) {
                        row[k] = 1;
                        continue;
                    }
                    if (!grid) grid.emplace(sp.items[a1], sim.tiles);
                    row[k] = fast_mate(a1, *grid, groups[k].second, gammas[k]);
                }
                mate.emplace(a1, std::move(row));
            }

            for (std::uint32_t a1 : pa) {
                const auto& row = mate.at(a1);
                std::optional<std::optional<std::uint32_t>> trim;
                for (std::size_t k = 0; k < gn; ++k) {
                    if (row[k]) continue;
                    // a dangling partial block may commit a position; the
                    // same supertile without it stands in for a1
                    if (!trim) trim = trimmed(a1);
                    if (*trim && mate.at(**trim)[k]) {
                        ++excused;
                        continue;
                    }
                    if (any_grown(a1, gammas[k])) continue;
                    if (*trim && any_grown(**trim, gammas[k])) {
                        ++excused;
                        continue;
                    }
                    ++bad;
                    if (!reported) {
                        reported = true;
                        SimWitness w;
                        w.relation = Relation::WeaklyModels;
                        w.kind = "no-mate";
                        w.simulator = {sp.items[a1]};
                        w.simulated = {tp.items[a], tp.items[groups[k].second.front().partner], groups[k].first};
                        w.detail = "no growth of the simulator supertile combines into a preimage of the result";
                        add_witness(std::move(w));
                    }
                }
            }
        }
        report.simulated_steps = std::max(report.simulated_steps, steps);
        if (excused)
            report.notes.push_back("weakly-models: " + std::to_string(excused) +
                                   " (step, preimage) pairs matched through the preimage with its unmapped partial blocks removed");
        if (bad) report.notes.push_back("weakly-models: " + std::to_string(bad) + " unmatched (step, preimage) pairs");
        return finish(Relation::WeaklyModels, bad == 0);
    }

    /// Whether some growth of a1 and b1 combines into a preimage of gamma.
    bool strong_pair_ok(std::uint32_t a1, std::uint32_t b1, int gamma, const std::vector<Vec2>& vs) {
        std::vector<std::uint32_t> ra{a1}, rb{b1};
        for (auto v : reach(a1)) ra.push_back(v);
        for (auto v : reach(b1)) rb.push_back(v);
        for (std::uint32_t a2 : ra) {
            PlacementGrid grid(sp.items[a2], sim.tiles);
            for (std::uint32_t b2 : rb)
                for (Vec2 v : vs) {
                    Vec2 u = aligned(a2, b2, v);
                    auto p = grid.probe(sp.items[b2], u.x, u.y);
                    if (!p.overlap && p.seam >= sim.temperature && merge_maps_to(a2, b2, u, gamma))
                        return true;
                }
        }
        for (std::uint32_t a2 : ra)
            for (std::uint32_t b2 : rb)
                for (const Supertile& r : combine(sp.items[a2], sp.items[b2], sim.tiles, sim.temperature).results)
                    if (maps_to(r, gamma)) return true;
        return false;
    }

    void strong_pair(std::uint32_t a, std::uint32_t x, const Supertile& g, const std::vector<Vec2>& vs, int gamma,
                     std::uint32_t a1, const PlacementGrid& grid, std::uint32_t b1, std::set<std::string>& witnessed,
                     std::size_t& undecided) {
        const Supertile& sa = sp.items[a1];
        // classify at the first aligned placement that fails
        std::optional<PlacementGrid::Probe> fail_probe;
        Vec2 fail_u{};
        bool ok = false;
        for (Vec2 v : vs) {
            Vec2 u = aligned(a1, b1, v);
            auto p = grid.probe(sp.items[b1], u.x, u.y);
            if (p.overlap || p.seam < sim.temperature) {
                if (!fail_probe) {
                    fail_probe = p;
                    fail_u = u;
                    if (witnessed.count(obstruction(p))) break;
                }
                continue;
            }
            if (merge_maps_to(a1, b1, u, gamma)) {
                ok = true;
                break;
            }
        }
        if (ok) return;
        std::string cls = fail_probe ? obstruction(*fail_probe) : std::string("image-mismatch");
        if (witnessed.count(cls)) return;
        if (completion_size(a1) > nm || completion_size(b1) > nm) {
            ++undecided;
            return;
        }
        if (strong_pair_ok(a1, b1, gamma, vs)) return;
        witnessed.insert(cls);
        SimWitness w;
        w.relation = Relation::StronglyModels;
        w.kind = cls;
        w.simulator = {sa, sp.items[b1]};
        w.simulated = {tp.items[a], tp.items[x], g};
        if (fail_probe) {
            w.translation = fail_u;
            if (!fail_probe->overlap) w.seam = fail_probe->seam;
        }
        w.detail = "no growth of these preimages combines into a preimage of the simulated result";
        add_witness(std::move(w));
    }

    /// Combinations of two bounded simulated producibles, grouped by result.
    std::vector<std::pair<Supertile, std::vector<Vec2>>> t_combinations(std::uint32_t a, std::uint32_t x) const {
        std::vector<std::pair<Supertile, std::vector<Vec2>>> groups;
        std::unordered_map<Supertile, std::size_t, SupertileHash> slot;
        PlacementGrid grid(tp.items[a], simd.tiles);
        for (Vec2 v : candidate_translations(tp.items[a], t_exposed[a], tp.items[x], t_exposed[x])) {
            auto p = grid.probe(tp.items[x], v.x, v.y);
            if (p.overlap || p.seam < simd.temperature) continue;
            Supertile g = merged(tp.items[a], tp.items[x], v);
            auto [it, fresh] = slot.emplace(g, groups.size());
            if (fresh) groups.push_back({std::move(g), {}});
            groups[it->second].second.push_back(v);
        }
        return groups;
    }

    std::string obstruction(const PlacementGrid::Probe& p) const {
        return p.overlap ? kStericObstruction : p.seam == 0 ? kGlueMismatch : kWeakSeam;
    }

    RelationStatus strongly_models() {
        // pairs by total size, then by rank, so the first witness of each
        // obstruction class is a smallest one
        std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
        for (std::uint32_t a = 0; a < tp.size(); ++a) {
            std::set<std::uint32_t> partners;
            for (const auto& [x, v] : partner_candidates(tp.items[a], t_exposed[a], tp, t_index))
                if (t_rank[x] >= t_rank[a]) partners.insert(x);
            for (std::uint32_t x : partners) pairs.push_back({a, x});
        }
        std::sort(pairs.begin(), pairs.end(), [&](const auto& l, const auto& r) {
            auto key = [&](const auto& p) {
                return std::tuple(tp.items[p.first].size() + tp.items[p.second].size(), t_rank[p.first],
                                  t_rank[p.second]);
            };
            return key(l) < key(r);
        });

        const std::vector<std::string> classes{kStericObstruction, kGlueMismatch, kWeakSeam};
        std::set<std::string> witnessed;
        std::size_t triples = 0, undecided = 0;
        bool stopped = false;
        auto all_witnessed = [&](const std::vector<std::string>& cs) {
            return std::all_of(cs.begin(), cs.end(), [&](const auto& c) { return witnessed.count(c) > 0; });
        };

        // fuzz-free preimage pairs first, where blocks line up one to one
        // and no placement overlaps; then every pair involving fuzz
        for (int phase = 0; phase < 2 && !stopped; ++phase) {
            const std::vector<std::string> wanted =
                phase == 0 ? std::vector<std::string>{kGlueMismatch, kWeakSeam} : classes;
            for (const auto& [a, x] : pairs) {
                if (all_witnessed(wanted)) {
                    stopped = phase == 1 || all_witnessed(classes);
                    break;
                }
                int ia = image_id(tp.items[a]), ix = image_id(tp.items[x]);
                if (ia < 0 || ix < 0) continue;
                for (auto& [g, vs] : t_combinations(a, x)) {
                    if (phase == 0) ++triples;
                    int gamma = static_cast<int>(images.insert(g, Witness{}).first);
                    for (std::uint32_t a1 : phase == 0 ? mate_pre[ia] : pre[ia]) {
                        const Supertile& sa = sp.items[a1];
                        PlacementGrid grid(sa, sim.tiles);
                        for (std::uint32_t b1 : phase == 0 ? mate_pre[ix] : pre[ix]) {
                            if (phase == 1 && fuzz_free[a1] && fuzz_free[b1]) continue;
                            strong_pair(a, x, g, vs, gamma, a1, grid, b1, witnessed, undecided);
                        }
                    }
                }
            }
        }
        report.notes.push_back("strongly-models: " + std::to_string(triples) + " simulated combinations scanned" +
                               (stopped ? "; scan ended once every obstruction class had a witness" : ""));
        if (undecided)
            report.notes.push_back("strongly-models: " + std::to_string(undecided) +
                                   " preimage pairs left undecided because completing their blocks exceeds the bound");
        return finish(Relation::StronglyModels, witnessed.empty());
    }
};

SimulationChecker::SimulationChecker(const Tas& simulator, const Tas& simulated, const RepresentationFunction& rep,
                                     const SimCheckOptions& opts)
    : impl_(std::make_unique<Impl>(simulator, simulated, rep, opts)) {}

SimulationChecker::~SimulationChecker() = default;

RelationStatus SimulationChecker::check(Relation r) {
    if (auto s = impl_->report.status(r); s != RelationStatus::NotChecked) return s;
    switch (r) {
    case Relation::EquivalentProductions: return impl_->equivalent_productions();
    case Relation::Follows: return impl_->follows();
    case Relation::WeaklyModels: return impl_->weakly_models();
    case Relation::StronglyModels: return impl_->strongly_models();
    case Relation::CleanMapping: return impl_->clean_mapping();
    }
    return RelationStatus::NotChecked;
}

const SimCheckReport& SimulationChecker::report() const { return impl_->report; }
const ProducibleSet& SimulationChecker::simulator_producibles() const { return impl_->sp; }
const ProducibleSet& SimulationChecker::simulated_producibles() const { return impl_->tp; }

std::optional<Supertile> SimulationChecker::image_of(std::uint32_t i) const { return impl_->info.at(i).image; }
const SupertileImage& SimulationChecker::image_info(std::uint32_t i) const { return impl_->info.at(i); }

namespace {

SimCheckReport run_one(const Tas& sim, const Tas& simd, const RepresentationFunction& rep, int max_size, Relation r) {
    SimCheckOptions o;
    o.max_size = max_size;
    SimulationChecker c(sim, simd, rep, o);
    c.check(r);
    return c.report();
}

}  // namespace

SimCheckReport check_equivalent_productions(const Tas& sim, const Tas& simd, const RepresentationFunction& rep,
                                            int max_size) {
    return run_one(sim, simd, rep, max_size, Relation::EquivalentProductions);
}

SimCheckReport check_follows(const Tas& sim, const Tas& simd, const RepresentationFunction& rep, int max_size) {
    return run_one(sim, simd, rep, max_size, Relation::Follows);
}

SimCheckReport check_weakly_models(const Tas& sim, const Tas& simd, const RepresentationFunction& rep, int max_size) {
    return run_one(sim, simd, rep, max_size, Relation::WeaklyModels);
}

SimCheckReport check_strongly_models(const Tas& sim, const Tas& simd, const RepresentationFunction& rep,
                                     int max_size) {
    return run_one(sim, simd, rep, max_size, Relation::StronglyModels);
}

SimCheckReport check_clean_mapping_all(const Tas& sim, const Tas& simd, const RepresentationFunction& rep,
                                       int max_size) {
    return run_one(sim, simd, rep, max_size, Relation::CleanMapping);
}

SimCheckReport check_simulation(const Tas& sim, const Tas& simd, const RepresentationFunction& rep,
                                const SimCheckOptions& opts, SimMode mode) {
    SimulationChecker c(sim, simd, rep, opts);
    for (Relation r : {Relation::CleanMapping, Relation::EquivalentProductions, Relation::Follows,
                       Relation::WeaklyModels})
        c.check(r);
    if (mode == SimMode::Strong) c.check(Relation::StronglyModels);
    return c.report();
}

}  // namespace ham
