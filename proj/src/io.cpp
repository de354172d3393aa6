#include "ham/io.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace ham {

namespace {

const char* const kSideKeys[4] = {"north", "east", "south", "west"};

const Json& need(const Json& j, const char* key, const std::string& where) {
    if (!j.is_object() || !j.contains(key)) throw InputError(where + ": missing key '" + key + "'");
    return j.at(key);
}

int need_int(const Json& j, const char* key, const std::string& where) {
    const Json& v = need(j, key, where);
    if (!v.is_number_integer()) throw InputError(where + ": '" + key + "' must be an integer");
    return v.get<int>();
}

std::string need_string(const Json& j, const char* key, const std::string& where) {
    const Json& v = need(j, key, where);
    if (!v.is_string()) throw InputError(where + ": '" + key + "' must be a string");
    return v.get<std::string>();
}

std::vector<Cell> cells_from(const Json& list, const TileSet& tiles, const char* xk, const char* yk,
                             const std::string& where) {
    if (!list.is_array()) throw InputError(where + " must be a list");
    std::vector<Cell> cells;
    for (const Json& c : list) {
        int x = need_int(c, xk, where), y = need_int(c, yk, where);
        if (std::abs(x) > kCoordLimit || std::abs(y) > kCoordLimit) throw InputError(where + ": coordinate out of range");
        cells.push_back({static_cast<std::int16_t>(x), static_cast<std::int16_t>(y),
                         tiles.id(need_string(c, "tile", where))});
    }
    return cells;
}

}  // namespace

Tas tas_from_json(const Json& j) {
    if (!j.is_object()) throw InputError("system file must be a JSON object");
    Tas sys;
    sys.name = j.contains("name") ? need_string(j, "name", "system") : "";
    sys.temperature = need_int(j, "temperature", "system");
    const Json& tl = need(j, "tiles", "system");
    if (!tl.is_array()) throw InputError("system: 'tiles' must be a list");
    std::vector<TileType> types;
    for (const Json& t : tl) {
        TileType tt;
        tt.name = need_string(t, "name", "tile");
        for (Side s : kSides) {
            const char* key = kSideKeys[static_cast<int>(s)];
            if (!t.contains(key) || t.at(key).is_null()) continue;
            const std::string where = "tile '" + tt.name + "' " + key;
            tt.glue(s) = Glue{need_string(t.at(key), "label", where), need_int(t.at(key), "strength", where)};
        }
        types.push_back(std::move(tt));
    }
    sys.tiles = TileSet(std::move(types));
    if (j.contains("initial_state") && !j.at("initial_state").is_null()) {
        const Json& st = j.at("initial_state");
        if (!st.is_array()) throw InputError("system: 'initial_state' must be a list");
        for (const Json& e : st) {
            auto cells = cells_from(need(e, "assembly", "initial_state"), sys.tiles, "x", "y", "initial_state");
            if (cells.empty()) throw InputError("initial_state: empty assembly");
            InitialSupertile is;
            is.supertile = canonicalize(Assembly(std::move(cells)));
            const Json& count = need(e, "count", "initial_state");
            if (count.is_string() && count.get<std::string>() == "inf")
                is.count = kInfiniteCount;
            else if (count.is_number_integer() && count.get<long>() > 0)
                is.count = count.get<long>();
            else
                throw InputError("initial_state: count must be a positive integer or \"inf\"");
            sys.initial.push_back(std::move(is));
        }
    }
    return sys;
}

Json tas_to_json(const Tas& sys) {
    Json j;
    j["name"] = sys.name;
    j["temperature"] = sys.temperature;
    Json tiles = Json::array();
    for (const TileType& t : sys.tiles.tiles()) {
        Json jt;
        jt["name"] = t.name;
        for (Side s : kSides) {
            const auto& g = t.glue(s);
            jt[kSideKeys[static_cast<int>(s)]] = g ? Json{{"label", g->label}, {"strength", g->strength}} : Json(nullptr);
        }
        tiles.push_back(std::move(jt));
    }
    j["tiles"] = std::move(tiles);
    if (!sys.initial.empty()) {
        Json st = Json::array();
        for (const InitialSupertile& is : sys.initial) {
            Json e;
            e["assembly"] = supertile_to_json(is.supertile, sys.tiles);
            e["count"] = is.count == kInfiniteCount ? Json("inf") : Json(is.count);
            st.push_back(std::move(e));
        }
        j["initial_state"] = std::move(st);
    }
    return j;
}

RepresentationFunction rep_from_json(const Json& j, const TileSet& simulator, const TileSet& simulated) {
    int scale = need_int(j, "scale", "representation");
    if (scale < 1) throw InputError("representation: scale must be positive");
    RepresentationFunction rep(scale);
    const Json& entries = need(j, "entries", "representation");
    if (!entries.is_array()) throw InputError("representation: 'entries' must be a list");
    for (const Json& e : entries) {
        auto cells = cells_from(need(e, "pattern", "entry"), simulator, "dx", "dy", "pattern");
        rep.add(std::move(cells), simulated.id(need_string(e, "maps_to", "entry")));
    }
    return rep;
}

Json rep_to_json(const RepresentationFunction& rep, const TileSet& simulator, const TileSet& simulated) {
    Json j;
    j["scale"] = rep.scale();
    Json entries = Json::array();
    for (const auto& e : rep.entries()) {
        Json pat = Json::array();
        for (const Cell& c : e.pattern) pat.push_back({{"dx", c.x}, {"dy", c.y}, {"tile", simulator[c.tile].name}});
        entries.push_back({{"pattern", std::move(pat)}, {"maps_to", simulated[e.maps_to].name}});
    }
    j["entries"] = std::move(entries);
    return j;
}

Json supertile_to_json(const Supertile& s, const TileSet& tiles) {
    Json out = Json::array();
    for (const Cell& c : s.cells()) out.push_back({{"x", c.x}, {"y", c.y}, {"tile", tiles[c.tile].name}});
    return out;
}

Json report_to_json(const SimCheckReport& r, const TileSet& simulator, const TileSet& simulated) {
    Json j;
    j["bound"] = r.bound;
    j["simulator_bound"] = r.simulator_bound;
    j["path_cap"] = r.path_cap;
    j["scale"] = r.scale;
    Json rel = Json::object();
    for (const auto& [k, v] : r.relations) rel[relation_name(k)] = status_name(v);
    j["relations"] = std::move(rel);
    j["simulator_producibles"] = r.simulator_producibles;
    j["simulated_producibles"] = r.simulated_producibles;
    j["simulator_steps"] = r.simulator_steps;
    j["simulated_steps"] = r.simulated_steps;
    Json ws = Json::array();
    for (const SimWitness& w : r.witnesses) {
        Json jw;
        jw["relation"] = relation_name(w.relation);
        jw["kind"] = w.kind;
        Json s = Json::array(), t = Json::array();
        for (const auto& x : w.simulator) s.push_back(supertile_to_json(x, simulator));
        for (const auto& x : w.simulated) t.push_back(supertile_to_json(x, simulated));
        jw["simulator"] = std::move(s);
        jw["simulated"] = std::move(t);
        if (w.translation) jw["translation"] = {w.translation->x, w.translation->y};
        if (w.seam) jw["seam"] = *w.seam;
        if (w.block) jw["block"] = {w.block->x, w.block->y};
        jw["detail"] = w.detail;
        ws.push_back(std::move(jw));
    }
    j["witnesses"] = std::move(ws);
    j["notes"] = r.notes;
    return j;
}

Json read_json_file(const std::string& path) {
    std::string text;
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream in(path);
        if (!in) throw InputError("cannot read '" + path + "'");
        text.assign(std::istreambuf_iterator<char>(in), {});
    }
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InputError("'" + path + "' is not valid JSON: " + e.what());
    }
}

void write_text_file(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw InputError("cannot write '" + path + "'");
    out << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string render_svg(const Supertile& s, const TileSet& tiles) {
    constexpr int k = 48;
    int w = 0, h = 0;
    for (const Cell& c : s.cells()) {
        w = std::max(w, c.x + 1);
        h = std::max(h, c.y + 1);
    }
    std::ostringstream o;
    o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w * k + 8 << "\" height=\"" << h * k + 8
      << "\" font-family=\"monospace\" font-size=\"10\">\n";
    const Assembly& a = s.canonical();
    for (const Cell& c : s.cells()) {
        int px = 4 + c.x * k, py = 4 + (h - 1 - c.y) * k;
        o << "<rect x=\"" << px << "\" y=\"" << py << "\" width=\"" << k << "\" height=\"" << k
          << "\" fill=\"#eef\" stroke=\"#999\" stroke-width=\"1\"/>\n";
        o << "<text x=\"" << px + k / 2 << "\" y=\"" << py + k / 2 + 3 << "\" text-anchor=\"middle\">"
          << tiles[c.tile].name << "</text>\n";
        for (Side side : kSides) {
            int st = tiles.strength(c.tile, side);
            if (st <= 0) continue;
            int x1 = px, y1 = py, x2 = px + k, y2 = py + k;
            if (side == Side::North) y2 = py;
            if (side == Side::South) y1 = py + k;
            if (side == Side::East) x1 = px + k;
            if (side == Side::West) x2 = px;
            auto nb = a.at(c.x + dx(side), c.y + dy(side));
            const char* colour = nb && tiles.bond(c.tile, side, *nb) > 0 ? "#c00" : "#333";
            o << "<line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\"" << y2 << "\" stroke=\""
              << colour << "\" stroke-width=\"" << 1 + 2 * st << "\"/>\n";
        }
    }
    o << "</svg>\n";
    return o.str();
}

}  // namespace ham
