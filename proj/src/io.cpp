#include "mulcube/io.hpp"

#include <fstream>
#include <stdexcept>

namespace mulcube {

using nlohmann::json;

nlohmann::json config_to_json(const DigitConfig& x) {
  json j;
  j["base"] = x.base();
  j["core"] = {{"start", x.core_start()}, {"digits", x.core()}};
  if (x.tail_kind() == DigitConfig::Tail::zeros)
    j["tail"] = {{"kind", "zeros"}};
  else
    j["tail"] = {{"kind", "periodic"}, {"word", x.tail_word()}};
  return j;
}

DigitConfig config_from_json(const nlohmann::json& j) {
  std::uint64_t base = j.at("base").get<std::uint64_t>();
  std::int64_t start = j.at("core").at("start").get<std::int64_t>();
  auto digits = j.at("core").at("digits").get<std::vector<std::uint64_t>>();
  std::string kind = j.at("tail").at("kind").get<std::string>();
  if (kind == "zeros") return DigitConfig(base, start, std::move(digits));
  if (kind == "periodic")
    return DigitConfig(base, start, std::move(digits),
                       j.at("tail").at("word").get<std::vector<std::uint64_t>>());
  throw std::invalid_argument("unknown tail kind '" + kind + "'");
}

nlohmann::json patch_to_json(const Patch& p) {
  json cells = json::array();
  for (const auto& [z, v] : p.cells) cells.push_back(json{{"pos", z.c}, {"value", v}});
  return json{{"prebasis", p.basis.entries()}, {"cells", cells}};
}

Patch patch_from_json(const nlohmann::json& j) {
  Patch p(Prebasis(j.at("prebasis").get<std::vector<std::uint64_t>>()));
  for (const auto& cell : j.at("cells"))
    p.place(Point(cell.at("pos").get<std::vector<std::int64_t>>()),
            cell.at("value").get<std::uint64_t>());
  return p;
}

nlohmann::json path_to_json(const LatticePath& p) {
  json j = json::array();
  for (const auto& pt : p.points()) j.push_back(pt.c);
  return j;
}

LatticePath path_from_json(const nlohmann::json& j) {
  std::vector<Point> pts;
  for (const auto& pt : j) pts.emplace_back(pt.get<std::vector<std::int64_t>>());
  return LatticePath(std::move(pts));
}

nlohmann::json matrix_to_json(const MacroMatrix& a) {
  return json{{"rows", a.rows()}, {"cols", a.cols()}, {"entries", a.entries()}};
}

MacroMatrix matrix_from_json(const nlohmann::json& j) {
  return MacroMatrix(j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>(),
                     j.at("entries").get<std::vector<std::uint64_t>>());
}

nlohmann::json tileset_to_json(const TileSet& t) {
  json tiles = json::array();
  auto faces = Face::all(t.basis().dim());
  for (std::uint64_t a = 0; a < t.size(); ++a) {
    MulCube c = t.cube(a);
    json labels = json::array();
    for (const auto& s : faces)
      labels.push_back(json{{"anchor", s.anchor()},
                            {"direction", s.direction()},
                            {"label", cube_label(c, s)}});
    tiles.push_back(json{{"value", a}, {"faces", labels}});
  }
  return json{{"prebasis", t.basis().entries()}, {"tiles", tiles}};
}

TileSet tileset_from_json(const nlohmann::json& j) {
  TileSet t(Prebasis(j.at("prebasis").get<std::vector<std::uint64_t>>()));
  if (j.at("tiles").size() != t.size())
    throw std::invalid_argument("tile count does not match the prebasis");
  return t;
}

std::string dump_json(const nlohmann::json& j) { return j.dump(2) + "\n"; }

nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file '" + path + "'");
  json j;
  in >> j;
  return j;
}

void save_json_file(const std::string& path, const nlohmann::json& j) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write file '" + path + "'");
  out << dump_json(j);
}

}  // namespace mulcube
