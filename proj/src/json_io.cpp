#include "ribbonry/json_io.hpp"

#include "ribbonry/errors.hpp"

namespace ribbonry {

Json to_json(const Region& region) {
  Json cells = Json::array();
  for (const Cell& c : region.cells()) cells.push_back({c.x, c.y});
  return Json{{"width", region.width()}, {"height", region.height()}, {"area", region.area()}, {"cells", cells}};
}

Json to_json(const Tile& tile) {
  return Json{{"root", {tile.root.x, tile.root.y}}, {"moves", tile.shape.word()}};
}

Json to_json(const Tiling& tiling) {
  Json tiles = Json::array();
  for (const Tile& t : tiling.tiles) tiles.push_back(to_json(t));
  return Json{{"tiles", tiles}};
}

Json to_json(const SGraph& graph) {
  Json vertices = Json::array();
  for (const VertexId& v : graph.vertices) vertices.push_back({{"level", v.level}, {"rank", v.rank}});
  Json edges = Json::array();
  Json tau = Json::array();
  for (const SEdge& e : graph.edges) {
    edges.push_back({{"u", e.from}, {"v", e.to}, {"class", to_string(e.kind)}});
    if (e.forced()) tau.push_back({e.from, e.to});
  }
  return Json{{"ribbon_length", graph.ribbon_length},
              {"vertices", vertices},
              {"edges", edges},
              {"tau", tau},
              {"free_edges", graph.free_edge_count()},
              {"forced_edges", graph.forced_edge_count()}};
}

namespace {

Cell cell_from_json(const Json& j, const char* what) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer()) {
    throw InvalidArgument(std::string(what) + " must be an [x, y] integer pair");
  }
  return {j[0].get<int>(), j[1].get<int>()};
}

}  // namespace

Tile tile_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("root") || !j.contains("moves") || !j["moves"].is_string()) {
    throw InvalidArgument("tile must be an object with \"root\" and \"moves\"");
  }
  const std::string word = j["moves"].get<std::string>();
  return Tile{cell_from_json(j["root"], "tile root"), shape_from_word(word, static_cast<int>(word.size()) + 1)};
}

Tiling tiling_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("tiles") || !j["tiles"].is_array()) {
    throw InvalidArgument("tiling must be an object with a \"tiles\" array");
  }
  Tiling t;
  for (const Json& tile : j["tiles"]) t.tiles.push_back(tile_from_json(tile));
  canonicalize(t);
  return t;
}

Region region_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("cells") || !j["cells"].is_array()) {
    throw InvalidArgument("region must be an object with a \"cells\" array");
  }
  std::vector<Cell> cells;
  for (const Json& c : j["cells"]) cells.push_back(cell_from_json(c, "cell"));
  return Region(std::move(cells));
}

}  // namespace ribbonry
