#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace ribbonry {

/// Unit square [x, x+1] x [y, y+1].
struct Cell {
  int x = 0;
  int y = 0;

  constexpr int level() const noexcept { return x + y; }

  friend constexpr bool operator==(const Cell&, const Cell&) = default;
};

/// Canonical cell order: by level, then by column.
constexpr bool canonical_less(const Cell& a, const Cell& b) noexcept {
  return a.level() != b.level() ? a.level() < b.level() : a.x < b.x;
}

/// Ribbon shape: `length` cells, with `length - 1` moves. Bit i of `moves` is the i-th
/// step: 0 steps east, 1 steps north.
class RibbonShape {
 public:
  static constexpr int kMaxLength = 64;

  RibbonShape() = default;
  RibbonShape(int length, std::uint64_t moves);

  int length() const noexcept { return length_; }
  std::uint64_t moves() const noexcept { return moves_; }
  bool step_north(int i) const noexcept { return (moves_ >> i) & 1U; }

  /// "E"/"N" word of length n-1, first move first.
  std::string word() const;

  friend bool operator==(const RibbonShape&, const RibbonShape&) = default;

 private:
  int length_ = 1;
  std::uint64_t moves_ = 0;
};

/// Builds a shape from a word over {0,1} or {E,N}; 0/E is east, 1/N is north.
RibbonShape shape_from_word(std::string_view word, int n);

/// All 2^(n-1) shapes of length n in lexicographic word order (E before N).
std::vector<RibbonShape> all_shapes(int n);

struct Tile {
  Cell root;
  RibbonShape shape;

  int level() const noexcept { return root.level(); }
  friend bool operator==(const Tile&, const Tile&) = default;
};

/// Cells of a tile from the root, one per level.
std::vector<Cell> cells_of(const Tile& tile);

/// Finite set of lattice cells, normalized so min x = min y = 0, stored in canonical order.
class Region {
 public:
  Region() = default;
  /// Duplicates are rejected. Translation is normalized away.
  explicit Region(std::vector<Cell> cells);

  int area() const noexcept { return static_cast<int>(cells_.size()); }
  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  bool empty() const noexcept { return cells_.empty(); }

  /// Cells in canonical (level, x) order.
  const std::vector<Cell>& cells() const noexcept { return cells_; }

  bool contains(Cell c) const noexcept { return index_of(c) >= 0; }
  /// Canonical index of `c`, or -1.
  int index_of(Cell c) const noexcept {
    if (c.x < 0 || c.y < 0 || c.x >= width_ || c.y >= height_) return -1;
    return grid_[static_cast<std::size_t>(c.y) * width_ + c.x];
  }

  int min_level() const noexcept { return cells_.empty() ? 0 : cells_.front().level(); }
  int max_level() const noexcept { return cells_.empty() ? 0 : cells_.back().level(); }
  /// First canonical index whose level is >= `level` (area() if none).
  int level_start(int level) const noexcept;

  std::map<int, int> level_histogram() const;

  bool is_connected() const;
  bool is_simply_connected() const;

  friend bool operator==(const Region& a, const Region& b) { return a.cells_ == b.cells_; }

 private:
  std::vector<Cell> cells_;
  std::vector<int> grid_;
  std::vector<int> level_offsets_;
  int width_ = 0;
  int height_ = 0;
};

/// Tiles in canonical order of their roots. The region is implied by the tiles' cells.
struct Tiling {
  std::vector<Tile> tiles;

  friend bool operator==(const Tiling&, const Tiling&) = default;
};

/// Sorts tiles into canonical root order.
void canonicalize(Tiling& tiling);

/// True iff the tiles partition the region's cells and are in canonical order.
bool is_tiling_of(const Tiling& tiling, const Region& region);

/// Region covered by the tiles (normalized); throws InvalidArgument on overlap.
Region region_of(const Tiling& tiling);

/// M rows by N columns.
Region build_rectangle(int rows, int cols);
/// Generalized Aztec diamond AD(N, n, k).
Region build_aztec(int size, int n, int offset);
/// Stair with `rows` rows of length `row_length`, each shifted one cell right.
Region build_stair(int rows, int row_length);

/// Grid text: '#' is a cell, '.' is empty, the last line is row y = 0.
Region parse_region(std::string_view text);
std::string to_grid_text(const Region& region);

}  // namespace ribbonry
