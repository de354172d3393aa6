#include "ham/engine.hpp"
#include "ham/io.hpp"
#include "ham/ladders.hpp"
#include "ham/lift.hpp"
#include "ham/simrel.hpp"
#include "ham/temps.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

using namespace ham;

namespace {

struct Outcome {
    bool pass = true;
    std::string report;  // compared across runs
    std::string why;     // first failure
};

void expect(Outcome& o, bool cond, const std::string& what) {
    if (!cond && o.pass) {
        o.pass = false;
        o.why = what;
    }
}

std::vector<int> candidate_table(int c, int tau, int tau_prime) {
    std::vector<int> t;
    for (int x = 1; x < tau; ++x) t.push_back(c * x);
    t.push_back(tau_prime);
    return t;
}

std::vector<int> valid_constants(int tau, int tau_prime) {
    std::vector<int> out;
    for (int c = 1; c <= tau_prime; ++c) {
        auto t = candidate_table(c, tau, tau_prime);
        if (*std::max_element(t.begin(), t.end()) > tau_prime) continue;  // leaves the codomain
        if (is_uniform_mapping_oracle(t, tau, tau_prime)) out.push_back(c);
    }
    return out;
}

Outcome uniform_mapping() {
    Outcome o;
    std::ostringstream r;
    for (int tau = 1; tau <= 40; ++tau)
        for (int tp = tau + 1; tp <= 40; ++tp) {
            auto valid = valid_constants(tau, tp);
            auto m = find_uniform_mapping(tau, tp);
            std::string at = "(" + std::to_string(tau) + "," + std::to_string(tp) + ")";
            expect(o, m.has_value() == !valid.empty(), "existence differs at " + at);
            if (m) {
                expect(o, is_uniform_mapping_oracle(m->table, tau, tp), "returned mapping fails the oracle at " + at);
                expect(o, m->table == candidate_table(m->c, tau, tp), "returned mapping is not almost linear at " + at);
                expect(o, std::find(valid.begin(), valid.end(), m->c) != valid.end(), "constant not valid at " + at);
                r << at << "c=" << m->c << ";";
            } else {
                r << at << "none;";
            }
        }
    o.report = r.str();
    return o;
}

Outcome gap_characterization() {
    Outcome o;
    std::ostringstream r;
    for (int tau = 2; tau <= 12; ++tau) {
        const int limit = 2 * tau * tau + 10;
        auto gaps = no_mapping_gaps(tau, limit);
        std::vector<int> expected;
        for (int tp = tau + 1; tp <= limit; ++tp)
            if (tp < 2 * tau - 1 || valid_constants(tau, tp).empty()) expected.push_back(tp);
        expect(o, gaps == expected, "gap list differs for tau " + std::to_string(tau));
        for (int g : gaps) {
            expect(o, g <= (tau - 1) * (tau - 1), "gap above (tau-1)^2 for tau " + std::to_string(tau));
            int c = (g + tau - 1) / tau;
            expect(o, (tau - 1) * c >= g, "gap violates (tau-1)ceil(tau'/tau) >= tau'");
            expect(o, check_gap_implication(tau, g), "check_gap_implication disagrees");
        }
        r << tau << ":";
        for (int g : gaps) r << g << ",";
        r << ";";
    }
    o.report = r.str();
    return o;
}

int brute_min_cut(const BindingGraph& g) {
    int best = -1;
    const unsigned n = static_cast<unsigned>(g.vertex_count);
    for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
        int w = 0;
        for (const Edge& e : g.edges)
            if (((mask >> e.u) & 1u) != ((mask >> e.v) & 1u)) w += e.weight;
        if (best < 0 || w < best) best = w;
    }
    return best < 0 ? 0 : best;
}

Outcome min_cut_oracle() {
    Outcome o;
    std::ostringstream r;
    std::mt19937 rng(20260611);
    int made = 0;
    while (made < 200) {
        const int size = 2 + static_cast<int>(rng() % 7);
        // random polyomino grown from the origin
        std::vector<std::pair<int, int>> pos{{0, 0}};
        std::set<std::pair<int, int>> taken{{0, 0}};
        while (static_cast<int>(pos.size()) < size) {
            auto [x, y] = pos[rng() % pos.size()];
            Side s = kSides[rng() % 4];
            std::pair<int, int> p{x + dx(s), y + dy(s)};
            if (taken.insert(p).second) pos.push_back(p);
        }
        // one tile type per cell, one label per adjacency
        std::vector<TileType> types(size);
        for (int i = 0; i < size; ++i) types[i].name = "t" + std::to_string(i);
        int label = 0;
        for (int i = 0; i < size; ++i)
            for (int j = 0; j < size; ++j) {
                if (pos[j].first != pos[i].first + 1 && pos[j].second != pos[i].second + 1) continue;
                Side s;
                if (pos[j] == std::pair(pos[i].first + 1, pos[i].second))
                    s = Side::East;
                else if (pos[j] == std::pair(pos[i].first, pos[i].second + 1))
                    s = Side::North;
                else
                    continue;
                int w = static_cast<int>(rng() % 4);
                if (w == 0) continue;
                std::string l = "g" + std::to_string(label++);
                types[i].glue(s) = Glue{l, w};
                types[j].glue(opposite(s)) = Glue{l, w};
            }
        TileSet ts(types);
        std::vector<Cell> cells;
        for (int i = 0; i < size; ++i)
            cells.push_back({static_cast<std::int16_t>(pos[i].first), static_cast<std::int16_t>(pos[i].second),
                             static_cast<TileId>(i)});
        Assembly a(cells);
        BindingGraph g = binding_graph(a, ts);
        if (!is_connected(g)) continue;
        ++made;
        int fast = min_cut_weight(g), slow = brute_min_cut(g);
        expect(o, fast == slow, "min cut differs on assembly " + std::to_string(made));
        r << fast << ",";
    }
    o.report = r.str();
    return o;
}

Outcome ladder_threshold() {
    Outcome o;
    std::ostringstream r;
    for (int tau : {3, 4}) {
        LadderSystem ls = gen_ladder_system(tau);
        for (int h = 1; h <= tau + 2; ++h)
            for (int d = 0; d <= std::min(h, tau + 1); ++d) {
                std::vector<int> all, first, last;
                for (int i = 0; i < h; ++i) all.push_back(i);
                for (int i = 0; i < d; ++i) {
                    first.push_back(i);
                    last.push_back(h - 1 - i);
                }
                std::sort(last.begin(), last.end());
                for (const auto& [lr, rr] : {std::pair(all, first), std::pair(first, first), std::pair(last, all)}) {
                    Supertile l = build_half_ladder(ls, {LadderSide::Left, h, lr});
                    Supertile rt = build_half_ladder(ls, {LadderSide::Right, h, rr});
                    bool binds = !combine(l, rt, ls.tas.tiles, tau).empty();
                    expect(o, binds == (d >= tau),
                           "tau " + std::to_string(tau) + " height " + std::to_string(h) + " rungs " + std::to_string(d));
                    r << binds;
                }
            }
        r << ";";
    }
    o.report = r.str();
    return o;
}

const std::vector<Relation> kAll{Relation::CleanMapping, Relation::EquivalentProductions, Relation::Follows,
                                 Relation::WeaklyModels, Relation::StronglyModels};

std::string report_text(const SimCheckReport& r, const TileSet& sim, const TileSet& simd) {
    return report_to_json(r, sim, simd).dump();
}

struct PairStatus {
    std::string name;
    int bound = 0;
    RelationStatus weak = RelationStatus::NotChecked;
    RelationStatus strong = RelationStatus::NotChecked;
};

std::vector<PairStatus> checked_pairs;

Outcome lift_strong() {
    Outcome o;
    std::ostringstream r;
    for (auto [tau, tp] : {std::pair(2, 4), std::pair(3, 6)}) {
        LiftedSystem ls = lift_system(gen_ladder_system(tau).tas, tp);
        SimCheckOptions opts;
        opts.max_size = 12;
        SimulationChecker c(ls.lifted, ls.original, ls.representation, opts);
        for (Relation rel : kAll) {
            auto t0 = std::chrono::steady_clock::now();
            auto st = c.check(rel);
            double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            bool required = rel != Relation::WeaklyModels;
            if (required)
                expect(o, st == RelationStatus::Verified,
                       std::string(relation_name(rel)) + " not verified for lift " + std::to_string(tau) + "->" +
                           std::to_string(tp));
            if (rel == Relation::StronglyModels) expect(o, secs < 120, "strong check exceeded two minutes");
        }
        checked_pairs.push_back({"lift " + std::to_string(tau) + "->" + std::to_string(tp), 12,
                                 c.report().status(Relation::WeaklyModels), c.report().status(Relation::StronglyModels)});
        r << report_text(c.report(), ls.lifted.tiles, ls.original.tiles) << "\n";
    }
    o.report = r.str();
    return o;
}

constexpr int kSimLadderBound = 14;

struct SimLadderRun {
    SimLadderSystem sl = gen_sim_ladder_system(3, 4);
    std::unique_ptr<SimulationChecker> checker;
    double standard_secs = 0;
};

std::unique_ptr<SimLadderRun> sim_run;

Outcome standard_without_mapping() {
    Outcome o;
    sim_run = std::make_unique<SimLadderRun>();
    auto& run = *sim_run;
    expect(o, !find_uniform_mapping(3, 4), "a uniform mapping from 3 to 4 exists");
    SimCheckOptions opts;
    opts.max_size = kSimLadderBound;
    auto t0 = std::chrono::steady_clock::now();
    run.checker = std::make_unique<SimulationChecker>(run.sl.tas, run.sl.simulated, run.sl.representation, opts);
    for (Relation rel : {Relation::CleanMapping, Relation::EquivalentProductions, Relation::Follows,
                         Relation::WeaklyModels})
        expect(o, run.checker->check(rel) == RelationStatus::Verified,
               std::string(relation_name(rel)) + " not verified");
    run.standard_secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    expect(o, run.standard_secs < 300, "standard check exceeded five minutes");
    o.report = report_text(run.checker->report(), run.sl.tas.tiles, run.sl.simulated.tiles);
    return o;
}

Outcome strong_failure() {
    Outcome o;
    auto& run = *sim_run;
    const auto& sl = run.sl;
    auto st = run.checker->check(Relation::StronglyModels);
    expect(o, st == RelationStatus::Violated, "strongly-models not violated");
    const SimWitness* w = nullptr;
    for (const auto& x : run.checker->report().witnesses)
        if (x.relation == Relation::StronglyModels && x.kind == kWeakSeam) {
            w = &x;
            break;
        }
    expect(o, w != nullptr, "no insufficient-strength witness");
    std::ostringstream r;
    if (w) {
        expect(o, w->simulator.size() == 2, "witness is not a pair");
        if (w->simulator.size() == 2) {
            auto fam = [&](const Supertile& s) {
                return sl.family.at(sl.tas.tiles[s.cells().front().tile].name).family;
            };
            Family fl = fam(w->simulator[0]), fr = fam(w->simulator[1]);
            expect(o, is_left_family(fl) != is_left_family(fr), "witness halves are not opposite");
            auto rl = sim_rung_types(sl, w->simulator[0]);
            auto rr = sim_rung_types(sl, w->simulator[1]);
            expect(o, rl.size() == rr.size() && rl.size() == 3, "witness does not have three aligned rung pairs");
            for (std::size_t i = 0; i < std::min(rl.size(), rr.size()); ++i)
                expect(o, rl[i] != rr[i], "an aligned rung pair is same-family");
            expect(o, w->seam == 3, "seam strength is not 3");
            expect(o, rung_seam_strength(fl, rl, fr, rr, 3, 4) == 3, "rung seam strength is not 3");
            expect(o, combine(w->simulator[0], w->simulator[1], sl.tas.tiles, 4).empty(),
                   "witness pair combines in the simulator");
            for (const Supertile& t : w->simulated)
                if (t.size() <= 11) r << describe(t, sl.simulated.tiles) << ";";
            r << "rungs:";
            for (Family f : rl) r << family_letter(f);
            r << "/";
            for (Family f : rr) r << family_letter(f);
            r << ";seam=" << *w->seam << ";";
        }
    }
    checked_pairs.push_back({"sim-ladder 3->4", kSimLadderBound, run.checker->report().status(Relation::WeaklyModels),
                             run.checker->report().status(Relation::StronglyModels)});
    r << report_text(run.checker->report(), sl.tas.tiles, sl.simulated.tiles);
    o.report = r.str();
    return o;
}

Outcome strong_implies_weak() {
    Outcome o;
    std::ostringstream r;
    expect(o, checked_pairs.size() == 3, "expected three checked system pairs");
    for (const auto& p : checked_pairs) {
        if (p.strong == RelationStatus::Verified)
            expect(o, p.weak == RelationStatus::Verified, p.name + ": strong verified without weak");
        r << p.name << "@" << p.bound << ":" << status_name(p.strong) << "/" << status_name(p.weak) << ";";
    }
    o.report = r.str();
    return o;
}

Outcome one_special_rung() {
    Outcome o;
    const auto& sl = sim_run->sl;
    const auto& prods = sim_run->checker->simulator_producibles();
    std::size_t bad = 0;
    for (const Supertile& s : prods.items) {
        std::map<Family, std::set<std::pair<int, int>>> special;
        for (const Cell& c : s.cells()) {
            const SimTileInfo& info = sl.family.at(sl.tas.tiles[c.tile].name);
            if (info.set == BlockSet::Special) special[info.family].insert({c.x - info.offset.x, c.y - info.offset.y});
        }
        for (const auto& [f, blocks] : special) bad += blocks.size() > 1;
    }
    expect(o, bad == 0, std::to_string(bad) + " producibles hold two special bases in one half-ladder");
    o.report = std::to_string(prods.size()) + " producibles, " + std::to_string(bad) + " with two special bases";
    return o;
}

struct Criterion {
    int id;
    const char* title;
    std::function<Outcome()> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "uniform mapping search matches exhaustive almost-linear search", uniform_mapping},
        {2, "gap characterization for tau 2..12", gap_characterization},
        {3, "min cut equals brute force on 200 random assemblies", min_cut_oracle},
        {4, "half-ladders bind iff matching rungs >= tau", ladder_threshold},
        {5, "lifted ladders strongly simulate at N=12", lift_strong},
        {6, "(3,4) sim-ladder simulates at N=14 without a uniform mapping", standard_without_mapping},
        {7, "(3,4) sim-ladder strong-simulation failure witness", strong_failure},
        {8, "strong verification comes with weak verification", strong_implies_weak},
        {9, "no half-ladder holds two special rungs", one_special_rung},
    };
    int failures = 0;
    std::vector<std::string> first;
    for (const auto& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.why = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("criterion %d: %s - %s (%.1fs)%s%s\n", c.id, o.pass ? "PASS" : "FAIL", c.title, secs,
                    o.pass ? "" : ": ", o.why.c_str());
        std::fflush(stdout);
        failures += !o.pass;
        first.push_back(o.report);
    }

    // criterion 10: a second full run must reproduce every report byte for byte
    checked_pairs.clear();
    sim_run.reset();
    bool same = true;
    std::string diff;
    auto t0 = std::chrono::steady_clock::now();
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].run();
        } catch (const std::exception& e) {
            o.report = std::string("exception: ") + e.what();
        }
        if (o.report != first[i] && same) {
            same = false;
            diff = "report of criterion " + std::to_string(criteria[i].id) + " changed";
        }
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("criterion 10: %s - repeated runs give byte-identical reports (%.1fs)%s%s\n", same ? "PASS" : "FAIL",
                secs, same ? "" : ": ", diff.c_str());
    failures += !same;
    return failures == 0 ? 0 : 1;
}
