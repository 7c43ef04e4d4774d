#include "ribbonry/render.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>

#include "ribbonry/errors.hpp"

namespace ribbonry {

std::vector<Point> tile_outline(const Tile& tile) {
  const auto cells = cells_of(tile);
  std::set<std::pair<int, int>> in;
  for (const Cell& c : cells) in.emplace(c.x, c.y);
  auto has = [&](int x, int y) { return in.count({x, y}) > 0; };

  std::map<std::pair<int, int>, std::pair<int, int>> next;
  for (const Cell& c : cells) {
    const int x = c.x;
    const int y = c.y;
    if (!has(x, y - 1)) next[{x, y}] = {x + 1, y};
    if (!has(x + 1, y)) next[{x + 1, y}] = {x + 1, y + 1};
    if (!has(x, y + 1)) next[{x + 1, y + 1}] = {x, y + 1};
    if (!has(x - 1, y)) next[{x, y + 1}] = {x, y};
  }
  std::vector<Point> loop;
  const auto start = next.begin()->first;
  auto at = start;
  do {
    loop.push_back({at.first, at.second});
    at = next.at(at);
  } while (at != start && loop.size() <= next.size());

  std::vector<Point> corners;
  const std::size_t k = loop.size();
  for (std::size_t i = 0; i < k; ++i) {
    const Point& a = loop[(i + k - 1) % k];
    const Point& b = loop[i];
    const Point& c = loop[(i + 1) % k];
    const bool straight = (a.x == b.x && b.x == c.x) || (a.y == b.y && b.y == c.y);
    if (!straight) corners.push_back(b);
  }
  return corners;
}

namespace {

std::string fill_color(std::size_t index) {
  // Golden-angle hue steps keep neighbouring indices apart.
  const int hue = static_cast<int>((index * 137508U / 1000U) % 360U);
  return "hsl(" + std::to_string(hue) + ",65%,72%)";
}

struct Bounds {
  int min_x = 0, min_y = 0, max_x = 0, max_y = 0;
};

Bounds bounds_of(const Tiling& tiling) {
  if (tiling.tiles.empty()) throw InvalidArgument("cannot render an empty tiling");
  Bounds b{tiling.tiles.front().root.x, tiling.tiles.front().root.y, tiling.tiles.front().root.x,
           tiling.tiles.front().root.y};
  for (const Tile& t : tiling.tiles) {
    for (const Cell& c : cells_of(t)) {
      b.min_x = std::min(b.min_x, c.x);
      b.min_y = std::min(b.min_y, c.y);
      b.max_x = std::max(b.max_x, c.x);
      b.max_y = std::max(b.max_y, c.y);
    }
  }
  return b;
}

}  // namespace

std::string render_svg(const Tiling& tiling, int cell_size) {
  const Bounds b = bounds_of(tiling);
  const int margin = cell_size / 2;
  const int w = (b.max_x - b.min_x + 1) * cell_size + 2 * margin;
  const int h = (b.max_y - b.min_y + 1) * cell_size + 2 * margin;
  auto sx = [&](int x) { return margin + (x - b.min_x) * cell_size; };
  auto sy = [&](int y) { return h - margin - (y - b.min_y) * cell_size; };

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << w << "\" height=\"" << h
     << "\" viewBox=\"0 0 " << w << ' ' << h << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (std::size_t i = 0; i < tiling.tiles.size(); ++i) {
    os << "<polygon points=\"";
    bool first = true;
    for (const Point& p : tile_outline(tiling.tiles[i])) {
      if (!first) os << ' ';
      os << sx(p.x) << ',' << sy(p.y);
      first = false;
    }
    os << "\" fill=\"" << fill_color(i) << "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
  }
  const double r = cell_size * 0.12;
  for (const Tile& t : tiling.tiles) {
    os << "<circle cx=\"" << sx(t.root.x) + cell_size / 2.0 << "\" cy=\"" << sy(t.root.y) - cell_size / 2.0
       << "\" r=\"" << r << "\" fill=\"black\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string render_ascii(const Tiling& tiling) {
  static constexpr char kLetters[] = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ";
  const Bounds b = bounds_of(tiling);
  const int w = b.max_x - b.min_x + 1;
  const int h = b.max_y - b.min_y + 1;
  std::vector<std::string> rows(static_cast<std::size_t>(h), std::string(static_cast<std::size_t>(w), '.'));
  for (std::size_t i = 0; i < tiling.tiles.size(); ++i) {
    for (const Cell& c : cells_of(tiling.tiles[i])) {
      rows[static_cast<std::size_t>(b.max_y - c.y)][static_cast<std::size_t>(c.x - b.min_x)] = kLetters[i % 52];
    }
  }
  std::string out;
  for (const auto& row : rows) out += row + '\n';
  return out;
}

}  // namespace ribbonry
