#pragma once

#include <json.hpp>

#include "ribbonry/bigcount.hpp"
#include "ribbonry/region.hpp"
#include "ribbonry/sheffield.hpp"

namespace ribbonry {

using Json = nlohmann::ordered_json;

// Big integers always travel as decimal strings.
inline Json count_json(const BigCount& c) { return c.str(); }

Json to_json(const Region& region);
Json to_json(const Tile& tile);
Json to_json(const Tiling& tiling);
Json to_json(const SGraph& graph);

/// Parses {"root":[x,y],"moves":"ENE"}; throws InvalidArgument on malformed input.
Tile tile_from_json(const Json& j);
Tiling tiling_from_json(const Json& j);
Region region_from_json(const Json& j);

}  // namespace ribbonry
