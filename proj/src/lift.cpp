#include "ham/lift.hpp"

#include "ham/engine.hpp"

#include <algorithm>
#include <set>

namespace ham {

LiftedSystem lift_with_table(const Tas& sys, int tau_prime, const std::vector<int>& table) {
    LiftedSystem out;
    out.original = sys;
    std::vector<TileType> tiles;
    std::vector<TileId> bijection;
    for (std::size_t i = 0; i < sys.tiles.size(); ++i) {
        TileType t = sys.tiles[static_cast<TileId>(i)];
        t.name += kLiftSuffix;
        for (auto& g : t.glues) {
            if (!g || g->strength == 0) continue;
            if (g->strength > static_cast<int>(table.size()))
                throw InputError("glue strength " + std::to_string(g->strength) + " exceeds the temperature");
            g->strength = table[g->strength - 1];
        }
        tiles.push_back(std::move(t));
        bijection.push_back(static_cast<TileId>(i));
    }
    out.lifted.name = sys.name + "-lifted";
    out.lifted.tiles = TileSet(std::move(tiles));
    out.lifted.temperature = tau_prime;
    out.lifted.initial = sys.initial;  // tile ids line up one to one
    out.representation = RepresentationFunction::bijection(bijection);
    out.mapping = UniformMapping{sys.temperature, tau_prime, table.empty() ? 1 : table[0], table};
    return out;
}

LiftedSystem lift_system(const Tas& sys, int tau_prime) {
    sys.validate();
    auto m = find_uniform_mapping(sys.temperature, tau_prime);
    if (!m)
        throw InputError("no uniform mapping from temperature " + std::to_string(sys.temperature) + " to " +
                         std::to_string(tau_prime) + " (" + std::to_string(tau_prime) +
                         " is a gap); strong simulation by lifting is impossible");
    LiftedSystem out = lift_with_table(sys, tau_prime, m->table);
    out.mapping = *m;
    out.lifted.validate();
    return out;
}

namespace {

Supertile to_original(const LiftedSystem& ls, const Supertile& s) {
    auto img = apply_rep(ls.representation, s.canonical());
    return canonicalize(*img);
}

Supertile to_lifted(const Supertile& s) { return s; }  // identical tile ids

}  // namespace

LiftReport verify_lift(const LiftedSystem& ls, int max_size) {
    LiftReport rep;
    rep.bound = max_size;
    ProducibleSet orig = enumerate_producibles(ls.original, max_size);
    ProducibleSet lifted = enumerate_producibles(ls.lifted, max_size);
    rep.original_producibles = orig.size();
    rep.lifted_producibles = lifted.size();

    for (std::uint32_t i : lifted.sorted_order()) {
        Supertile img = to_original(ls, lifted.items[i]);
        if (!orig.contains(img))
            rep.discrepancies.push_back({"extra-image", {img}, {lifted.items[i]},
                                         "lifted producible maps outside the original producibles"});
    }
    for (std::uint32_t i : orig.sorted_order()) {
        if (!lifted.contains(to_lifted(orig.items[i])))
            rep.discrepancies.push_back({"missing-image", {orig.items[i]}, {},
                                         "original producible has no lifted preimage"});
    }

    const TileSet& ot = ls.original.tiles;
    PartnerIndex index;
    std::vector<std::vector<ExposedGlue>> exposed(orig.size());
    for (std::uint32_t i = 0; i < orig.size(); ++i) {
        exposed[i] = exposed_glues(orig.items[i], ot);
        index.add(i, exposed[i]);
    }
    for (std::uint32_t i : orig.sorted_order()) {
        std::set<std::uint32_t> partners;
        for (const ExposedGlue& g : exposed[i])
            for (const auto& e : index.lookup(g.label, opposite(g.side)))
                if (e.item >= i) partners.insert(e.item);
        for (std::uint32_t j : partners) {
            ++rep.pairs_checked;
            const Supertile& a = orig.items[i];
            const Supertile& b = orig.items[j];
            auto co = combine(a, b, ot, ls.original.temperature);
            auto cl = combine(to_lifted(a), to_lifted(b), ls.lifted.tiles, ls.lifted.temperature);
            std::vector<Supertile> mapped;
            for (const Supertile& r : cl.results) mapped.push_back(to_original(ls, r));
            std::sort(mapped.begin(), mapped.end());
            if (mapped != co.results) {
                LiftDiscrepancy d{"combination-mismatch", {a, b}, {a, b},
                                  std::to_string(co.results.size()) + " original results vs " +
                                      std::to_string(cl.results.size()) + " lifted results"};
                rep.discrepancies.push_back(std::move(d));
            }
        }
    }
    return rep;
}

}  // namespace ham
