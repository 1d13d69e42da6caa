#pragma once

#include <string>

#include <json.hpp>

#include "mulcube/cube.hpp"
#include "mulcube/digit_config.hpp"
#include "mulcube/macro.hpp"
#include "mulcube/tessellation.hpp"

namespace mulcube {

nlohmann::json config_to_json(const DigitConfig& x);
DigitConfig config_from_json(const nlohmann::json& j);

nlohmann::json patch_to_json(const Patch& p);
Patch patch_from_json(const nlohmann::json& j);

nlohmann::json path_to_json(const LatticePath& p);  // bare list of points
LatticePath path_from_json(const nlohmann::json& j);

nlohmann::json matrix_to_json(const MacroMatrix& a);
MacroMatrix matrix_from_json(const nlohmann::json& j);

nlohmann::json tileset_to_json(const TileSet& t);  // prebasis + per-cube face labels
TileSet tileset_from_json(const nlohmann::json& j);

// Files are read/written as 2-space-indented JSON with a trailing newline so
// emitted bytes are reproducible.
std::string dump_json(const nlohmann::json& j);
nlohmann::json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const nlohmann::json& j);

}  // namespace mulcube
