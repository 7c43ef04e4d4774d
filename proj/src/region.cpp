#include "ribbonry/region.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <set>

#include "ribbonry/errors.hpp"

namespace ribbonry {

RibbonShape::RibbonShape(int length, std::uint64_t moves) : length_(length), moves_(moves) {
  if (length < 1 || length > kMaxLength) {
    throw InvalidArgument("ribbon length must be in [1, 64], got " + std::to_string(length));
  }
  if (length < kMaxLength && (moves >> (length - 1)) != 0) {
    throw InvalidArgument("ribbon moves have bits beyond length - 1");
  }
}

std::string RibbonShape::word() const {
  std::string w;
  w.reserve(static_cast<std::size_t>(length_ - 1));
  for (int i = 0; i + 1 < length_; ++i) w.push_back(step_north(i) ? 'N' : 'E');
  return w;
}

RibbonShape shape_from_word(std::string_view word, int n) {
  if (n < 1) throw InvalidArgument("ribbon length must be positive");
  if (static_cast<int>(word.size()) != n - 1) {
    throw InvalidArgument("shape word has length " + std::to_string(word.size()) + ", expected " +
                          std::to_string(n - 1));
  }
  std::uint64_t moves = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    switch (word[i]) {
      case '0':
      case 'E':
        break;
      case '1':
      case 'N':
        moves |= std::uint64_t{1} << i;
        break;
      default:
        throw InvalidArgument(std::string("illegal shape symbol '") + word[i] + "'");
    }
  }
  return RibbonShape(n, moves);
}

std::vector<RibbonShape> all_shapes(int n) {
  if (n < 1 || n > 31) throw InvalidArgument("all_shapes supports lengths 1..31");
  std::vector<RibbonShape> shapes;
  const std::uint64_t count = std::uint64_t{1} << (n - 1);
  shapes.reserve(count);
  // Lexicographic order on words puts the first move in the most significant position.
  for (std::uint64_t code = 0; code < count; ++code) {
    std::uint64_t moves = 0;
    for (int i = 0; i + 1 < n; ++i) {
      if ((code >> (n - 2 - i)) & 1U) moves |= std::uint64_t{1} << i;
    }
    shapes.emplace_back(n, moves);
  }
  return shapes;
}

std::vector<Cell> cells_of(const Tile& tile) {
  std::vector<Cell> out;
  out.reserve(static_cast<std::size_t>(tile.shape.length()));
  Cell c = tile.root;
  out.push_back(c);
  for (int i = 0; i + 1 < tile.shape.length(); ++i) {
    if (tile.shape.step_north(i)) {
      ++c.y;
    } else {
      ++c.x;
    }
    out.push_back(c);
  }
  return out;
}

Region::Region(std::vector<Cell> cells) {
  if (cells.empty()) return;
  int min_x = std::numeric_limits<int>::max();
  int min_y = std::numeric_limits<int>::max();
  int max_x = std::numeric_limits<int>::min();
  int max_y = std::numeric_limits<int>::min();
  for (const Cell& c : cells) {
    min_x = std::min(min_x, c.x);
    min_y = std::min(min_y, c.y);
    max_x = std::max(max_x, c.x);
    max_y = std::max(max_y, c.y);
  }
  for (Cell& c : cells) {
    c.x -= min_x;
    c.y -= min_y;
  }
  std::sort(cells.begin(), cells.end(), canonical_less);
  if (std::adjacent_find(cells.begin(), cells.end()) != cells.end()) {
    throw InvalidArgument("region has duplicate cells");
  }
  cells_ = std::move(cells);
  width_ = max_x - min_x + 1;
  height_ = max_y - min_y + 1;
  grid_.assign(static_cast<std::size_t>(width_) * height_, -1);
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    grid_[static_cast<std::size_t>(cells_[i].y) * width_ + cells_[i].x] = static_cast<int>(i);
  }
  // level_offsets_[l - min_level] = first index with level >= l, for l in [min, max + 1].
  const int lo = min_level();
  const int hi = max_level();
  level_offsets_.assign(static_cast<std::size_t>(hi - lo + 2), area());
  for (int i = area() - 1; i >= 0; --i) level_offsets_[cells_[i].level() - lo] = i;
  for (int l = hi - lo; l >= 0; --l) {
    level_offsets_[l] = std::min(level_offsets_[l], level_offsets_[l + 1]);
  }
}

int Region::level_start(int level) const noexcept {
  if (cells_.empty() || level > max_level()) return area();
  if (level <= min_level()) return 0;
  return level_offsets_[level - min_level()];
}

std::map<int, int> Region::level_histogram() const {
  std::map<int, int> hist;
  for (const Cell& c : cells_) ++hist[c.level()];
  return hist;
}

namespace {

constexpr int kDx[4] = {1, -1, 0, 0};
constexpr int kDy[4] = {0, 0, 1, -1};

// Flood fill over a w x h grid; `open(x, y)` says whether a position is traversable.
template <typename Open>
int flood_components(int w, int h, Open open) {
  std::vector<char> seen(static_cast<std::size_t>(w) * h, 0);
  int components = 0;
  std::queue<std::pair<int, int>> q;
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      if (!open(x, y) || seen[static_cast<std::size_t>(y) * w + x]) continue;
      ++components;
      seen[static_cast<std::size_t>(y) * w + x] = 1;
      q.emplace(x, y);
      while (!q.empty()) {
        auto [cx, cy] = q.front();
        q.pop();
        for (int d = 0; d < 4; ++d) {
          int nx = cx + kDx[d];
          int ny = cy + kDy[d];
          if (nx < 0 || ny < 0 || nx >= w || ny >= h) continue;
          auto& s = seen[static_cast<std::size_t>(ny) * w + nx];
          if (s || !open(nx, ny)) continue;
          s = 1;
          q.emplace(nx, ny);
        }
      }
    }
  }
  return components;
}

}  // namespace

bool Region::is_connected() const {
  if (cells_.empty()) return false;
  return flood_components(width_, height_, [this](int x, int y) { return contains({x, y}); }) == 1;
}

bool Region::is_simply_connected() const {
  if (!is_connected()) return false;
  // The complement inside a one-cell frame must be a single 4-connected component.
  const int w = width_ + 2;
  const int h = height_ + 2;
  return flood_components(w, h, [this](int x, int y) { return !contains({x - 1, y - 1}); }) == 1;
}

void canonicalize(Tiling& tiling) {
  std::stable_sort(tiling.tiles.begin(), tiling.tiles.end(),
                   [](const Tile& a, const Tile& b) { return canonical_less(a.root, b.root); });
}

bool is_tiling_of(const Tiling& tiling, const Region& region) {
  std::vector<char> covered(static_cast<std::size_t>(region.area()), 0);
  int total = 0;
  for (std::size_t i = 0; i < tiling.tiles.size(); ++i) {
    if (i > 0 && !canonical_less(tiling.tiles[i - 1].root, tiling.tiles[i].root)) return false;
    for (const Cell& c : cells_of(tiling.tiles[i])) {
      int idx = region.index_of(c);
      if (idx < 0 || covered[idx]) return false;
      covered[idx] = 1;
      ++total;
    }
  }
  return total == region.area();
}

Region region_of(const Tiling& tiling) {
  std::vector<Cell> cells;
  for (const Tile& t : tiling.tiles) {
    for (const Cell& c : cells_of(t)) cells.push_back(c);
  }
  return Region(std::move(cells));
}

Region build_rectangle(int rows, int cols) {
  if (rows < 1 || cols < 1) throw InvalidArgument("rectangle dimensions must be positive");
  std::vector<Cell> cells;
  cells.reserve(static_cast<std::size_t>(rows) * cols);
  for (int y = 0; y < rows; ++y) {
    for (int x = 0; x < cols; ++x) cells.push_back({x, y});
  }
  return Region(std::move(cells));
}

Region build_aztec(int size, int n, int offset) {
  if (size < 1) throw InvalidArgument("aztec size N must be >= 1");
  if (n < 2) throw InvalidArgument("aztec ribbon length n must be >= 2");
  if (offset < 0 || offset > n - 2) {
    throw InvalidArgument("aztec offset k must lie in [0, n - 2], got " + std::to_string(offset));
  }
  // Column x has height n * min(x + 1, 2N - x). Bottoms descend by one up to the centre,
  // the right centre column sits k above the left one, then bottoms climb by n - 1.
  std::vector<Cell> cells;
  int bottom = 0;
  for (int x = 0; x < 2 * size; ++x) {
    if (x < size) {
      bottom = size - 1 - x;
    } else if (x == size) {
      bottom = offset;
    } else {
      bottom += n - 1;
    }
    const int height = n * std::min(x + 1, 2 * size - x);
    for (int y = bottom; y < bottom + height; ++y) cells.push_back({x, y});
  }
  return Region(std::move(cells));
}

Region build_stair(int rows, int row_length) {
  if (rows < 1 || row_length < 1) throw InvalidArgument("stair dimensions must be positive");
  std::vector<Cell> cells;
  for (int r = 0; r < rows; ++r) {
    for (int j = 0; j < row_length; ++j) cells.push_back({r + j, r});
  }
  return Region(std::move(cells));
}

Region parse_region(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty()) throw ParseError("empty grid", 1, 1);

  std::vector<Cell> cells;
  const int rows = static_cast<int>(lines.size());
  for (int i = 0; i < rows; ++i) {
    const int y = rows - 1 - i;
    for (std::size_t j = 0; j < lines[i].size(); ++j) {
      const char ch = lines[i][j];
      if (ch == '#') {
        cells.push_back({static_cast<int>(j), y});
      } else if (ch != '.') {
        throw ParseError(std::string("illegal character '") + ch + "'", i + 1, static_cast<int>(j) + 1);
      }
    }
  }
  if (cells.empty()) throw ParseError("grid has no cells", 1, 1);
  return Region(std::move(cells));
}

std::string to_grid_text(const Region& region) {
  std::string out;
  for (int y = region.height() - 1; y >= 0; --y) {
    for (int x = 0; x < region.width(); ++x) out.push_back(region.contains({x, y}) ? '#' : '.');
    out.push_back('\n');
  }
  return out;
}

}  // namespace ribbonry
