#include "ham/engine.hpp"
#include "ham/io.hpp"
#include "ham/ladders.hpp"
#include "ham/lift.hpp"
#include "ham/simrel.hpp"
#include "ham/temps.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>

using namespace ham;

namespace {

Tas load_tas(const std::string& path) { return tas_from_json(read_json_file(path)); }

std::string rung_list(const std::vector<Family>& fs) {
    std::string s = "[";
    for (std::size_t i = 0; i < fs.size(); ++i) {
        if (i) s += ",";
        s += family_letter(fs[i]);
    }
    return s + "]";
}

Json bundle(const SimLadderSystem& sl) {
    Json j;
    j["simulator"] = tas_to_json(sl.tas);
    j["simulated"] = tas_to_json(sl.simulated);
    j["representation"] = rep_to_json(sl.representation, sl.tas.tiles, sl.simulated.tiles);
    return j;
}

int cmd_validate(const std::string& file) {
    Tas sys = load_tas(file);
    sys.validate();
    std::cout << "ok: " << sys.tiles.size() << " tile types, temperature " << sys.temperature << "\n";
    return 0;
}

int cmd_enumerate(const std::string& file, int n, const std::string& render) {
    Tas sys = load_tas(file);
    sys.validate();
    ProducibleSet prods = enumerate_producibles(sys, n);
    auto order = prods.sorted_order();
    std::cout << prods.items.size() << " producible supertiles with at most " << n << " tiles\n";
    for (std::uint32_t i : order) std::cout << describe(prods.items[i], sys.tiles) << "\n";
    if (!render.empty()) {
        std::filesystem::create_directories(render);
        for (std::size_t k = 0; k < order.size(); ++k)
            write_text_file(render + "/supertile_" + std::to_string(k) + ".svg",
                            render_svg(prods.items[order[k]], sys.tiles));
    }
    return 0;
}

int cmd_map_find(int tau, int tau_prime) {
    if (tau > tau_prime) throw InputError("tau must not exceed tau'");
    auto m = find_uniform_mapping(tau, tau_prime);
    if (!m) {
        std::cout << "none: no uniform mapping from " << tau << " to " << tau_prime << "\n";
        return 0;
    }
    for (int x = 1; x <= tau; ++x) std::cout << x << " -> " << (*m)(x) << "\n";
    return 0;
}

int cmd_map_gaps(int tau, int limit) {
    if (tau < 1 || limit < tau) throw InputError("need 1 <= tau <= limit");
    auto gaps = no_mapping_gaps(tau, limit);
    for (std::size_t i = 0; i < gaps.size(); ++i) std::cout << (i ? " " : "") << gaps[i];
    std::cout << "\n";
    return 0;
}

int cmd_lift(const std::string& file, int tau_prime, const std::string& out, const std::string& rep_out) {
    LiftedSystem ls = lift_system(load_tas(file), tau_prime);
    write_text_file(out, dump(tas_to_json(ls.lifted)));
    if (!rep_out.empty())
        write_text_file(rep_out, dump(rep_to_json(ls.representation, ls.lifted.tiles, ls.original.tiles)));
    return 0;
}

int cmd_gen_ladder(int tau, const std::string& out) {
    write_text_file(out, dump(tas_to_json(gen_ladder_system(tau).tas)));
    return 0;
}

int cmd_gen_ladder_sim(int tau, int tau_prime, const std::string& out, const std::string& rep_out,
                       const std::string& simd_out) {
    SimLadderSystem sl = gen_sim_ladder_system(tau, tau_prime);
    if (out.empty() && rep_out.empty() && simd_out.empty()) {
        std::cout << dump(bundle(sl));
        return 0;
    }
    if (!out.empty()) write_text_file(out, dump(tas_to_json(sl.tas)));
    if (!rep_out.empty()) write_text_file(rep_out, dump(rep_to_json(sl.representation, sl.tas.tiles, sl.simulated.tiles)));
    if (!simd_out.empty()) write_text_file(simd_out, dump(tas_to_json(sl.simulated)));
    return 0;
}

int cmd_sim_check(const std::vector<std::string>& files, int n, const std::string& mode) {
    Tas sim, simd;
    Json rep_json;
    if (files.size() == 1) {
        Json b = read_json_file(files[0]);
        if (!b.is_object() || !b.contains("simulator") || !b.contains("simulated") || !b.contains("representation"))
            throw InputError("a single input must hold simulator, simulated and representation");
        sim = tas_from_json(b["simulator"]);
        simd = tas_from_json(b["simulated"]);
        rep_json = b["representation"];
    } else if (files.size() == 3) {
        sim = load_tas(files[0]);
        simd = load_tas(files[1]);
        rep_json = read_json_file(files[2]);
    } else {
        throw InputError("expected <simulator> <simulated> <rep> or one bundle file");
    }
    RepresentationFunction rep = rep_from_json(rep_json, sim.tiles, simd.tiles);
    SimCheckOptions opts;
    opts.max_size = n;
    auto report = check_simulation(sim, simd, rep, opts, mode == "strong" ? SimMode::Strong : SimMode::Standard);
    std::cout << dump(report_to_json(report, sim.tiles, simd.tiles));
    return report.ok() ? 0 : 1;
}

int cmd_demo(int tau, int tau_prime, int n) {
    SimLadderSystem sl = gen_sim_ladder_system(tau, tau_prime);
    SimCheckOptions opts;
    opts.max_size = n;
    SimulationChecker checker(sl.tas, sl.simulated, sl.representation, opts);
    RelationStatus st = checker.check(Relation::StronglyModels);
    std::cout << "strongly-models at bound " << n << ": " << status_name(st) << "\n";
    for (const SimWitness& w : checker.report().witnesses) {
        if (w.kind != kWeakSeam || w.simulator.size() < 2) continue;
        std::cout << "witness: " << w.kind << "\n";
        std::cout << "  left rungs:  " << rung_list(sim_rung_types(sl, w.simulator[0])) << "\n";
        std::cout << "  right rungs: " << rung_list(sim_rung_types(sl, w.simulator[1])) << "\n";
        std::cout << "  seam strength " << w.seam.value_or(0) << " < " << tau_prime << "\n";
        std::cout << "  left:  " << describe(w.simulator[0], sl.tas.tiles) << "\n";
        std::cout << "  right: " << describe(w.simulator[1], sl.tas.tiles) << "\n";
        std::cout << "  combinations: " << combine(w.simulator[0], w.simulator[1], sl.tas.tiles, tau_prime).results.size()
                  << "\n";
        break;
    }
    return st == RelationStatus::Violated ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hamsim: two-handed tile assembly simulation checker"};
    app.require_subcommand(1);
    int rc = 0;
    auto run = [&rc](auto f) { return [f, &rc] { rc = f(); }; };

    auto* tas = app.add_subcommand("tas", "tile assembly systems");
    tas->require_subcommand(1);
    std::string file, render, out, rep_out, simd_out, mode = "standard";
    int n = 0, tau = 0, tau_prime = 0, limit = 0;
    auto* validate = tas->add_subcommand("validate", "check a system file");
    validate->add_option("file", file)->required();
    validate->callback(run([&] { return cmd_validate(file); }));
    auto* enumerate = tas->add_subcommand("enumerate", "list producible supertiles");
    enumerate->add_option("file", file)->required();
    enumerate->add_option("--max-size", n)->required();
    enumerate->add_option("--render", render, "write one SVG per supertile here");
    enumerate->callback(run([&] { return cmd_enumerate(file, n, render); }));

    auto* map = app.add_subcommand("map", "uniform strength mappings");
    map->require_subcommand(1);
    auto* find = map->add_subcommand("find", "find a uniform mapping");
    find->add_option("--tau", tau)->required();
    find->add_option("--tau-prime", tau_prime)->required();
    find->callback(run([&] { return cmd_map_find(tau, tau_prime); }));
    auto* gaps = map->add_subcommand("gaps", "temperatures without a uniform mapping");
    gaps->add_option("--tau", tau)->required();
    gaps->add_option("--limit", limit)->required();
    gaps->callback(run([&] { return cmd_map_gaps(tau, limit); }));

    auto* lift = app.add_subcommand("lift", "raise a system to a higher temperature");
    lift->add_option("file", file)->required();
    lift->add_option("--tau-prime", tau_prime)->required();
    lift->add_option("-o", out, "lifted system")->required();
    lift->add_option("-r", rep_out, "representation function");
    lift->callback(run([&] { return cmd_lift(file, tau_prime, out, rep_out); }));

    auto* gen = app.add_subcommand("gen", "generate ladder systems");
    gen->require_subcommand(1);
    auto* ladder = gen->add_subcommand("ladder", "ladder system");
    ladder->add_option("--tau", tau)->required();
    ladder->add_option("-o", out, "output file");
    ladder->callback(run([&] { return cmd_gen_ladder(tau, out.empty() ? "-" : out); }));
    auto* ladder_sim = gen->add_subcommand("ladder-sim", "scale-2 simulator of the ladder system");
    ladder_sim->add_option("--tau", tau)->required();
    ladder_sim->add_option("--tau-prime", tau_prime)->required();
    ladder_sim->add_option("-o", out, "simulator system");
    ladder_sim->add_option("-r", rep_out, "representation function");
    ladder_sim->add_option("--simulated-out", simd_out, "simulated system");
    ladder_sim->callback(run([&] { return cmd_gen_ladder_sim(tau, tau_prime, out, rep_out, simd_out); }));

    auto* sim = app.add_subcommand("sim", "simulation checks");
    sim->require_subcommand(1);
    std::vector<std::string> files;
    auto* check = sim->add_subcommand("check", "check the simulation relations at a bound");
    check->add_option("files", files, "<simulator> <simulated> <rep>, or one bundle ('-' for stdin)")->required();
    check->add_option("--max-size", n)->required();
    check->add_option("--mode", mode)->check(CLI::IsMember({"standard", "strong"}));
    check->callback(run([&] { return cmd_sim_check(files, n, mode); }));

    auto* demo = app.add_subcommand("demo", "worked examples");
    demo->require_subcommand(1);
    auto* imposs = demo->add_subcommand("impossibility", "strong simulation fails for a temperature gap");
    tau = 3;
    tau_prime = 4;
    int demo_n = 11;
    imposs->add_option("--tau", tau);
    imposs->add_option("--tau-prime", tau_prime);
    imposs->add_option("--max-size", demo_n);
    imposs->callback(run([&] { return cmd_demo(tau, tau_prime, demo_n); }));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
