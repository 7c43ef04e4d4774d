#pragma once

#include <string>
#include <vector>

#include "ribbonry/region.hpp"

namespace ribbonry {

struct Point {
  int x = 0;
  int y = 0;
  friend bool operator==(const Point&, const Point&) = default;
};

/// Counter-clockwise outline of a tile's cells with collinear corners removed.
std::vector<Point> tile_outline(const Tile& tile);

/// SVG 1.1 document: one polygon per ribbon, filled by tile index, with a dot on each root.
std::string render_svg(const Tiling& tiling, int cell_size = 24);

/// One letter per tile (a-z, A-Z, cycling), '.' outside the tiling, top row first.
std::string render_ascii(const Tiling& tiling);

}  // namespace ribbonry
