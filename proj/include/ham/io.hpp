#pragma once

#include "ham/core.hpp"
#include "ham/representation.hpp"
#include "ham/simrel.hpp"

#include <json.hpp>

#include <string>

namespace ham {

using Json = nlohmann::ordered_json;

/// SystemFile: name, temperature, tiles, optional initial_state. Counts are
/// integers or "inf". Throws InputError on schema or tile set errors.
Tas tas_from_json(const Json& j);
Json tas_to_json(const Tas& sys);

/// RepFile: scale and entries of {pattern: [{dx, dy, tile}], maps_to}.
/// Pattern tiles name simulator tiles, maps_to a simulated tile.
RepresentationFunction rep_from_json(const Json& j, const TileSet& simulator, const TileSet& simulated);
Json rep_to_json(const RepresentationFunction& rep, const TileSet& simulator, const TileSet& simulated);

Json supertile_to_json(const Supertile& s, const TileSet& tiles);
Json report_to_json(const SimCheckReport& r, const TileSet& simulator, const TileSet& simulated);

/// Whole-file helpers; "-" reads stdin.
Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);
std::string dump(const Json& j);  // two-space indent, trailing newline

/// Static figure: tiles as labelled squares, glue strength as edge width.
std::string render_svg(const Supertile& s, const TileSet& tiles);

}  // namespace ham
