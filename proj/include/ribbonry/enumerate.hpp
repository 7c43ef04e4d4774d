#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "ribbonry/bigcount.hpp"
#include "ribbonry/region.hpp"

namespace ribbonry {

/// Covered/uncovered state of every cell of a region, bit-packed in canonical order.
class Occupancy {
 public:
  explicit Occupancy(const Region& region);

  const Region& region() const noexcept { return *region_; }

  bool covered(int index) const noexcept { return (bits_[index >> 6] >> (index & 63)) & 1U; }
  bool covered(Cell c) const noexcept {
    int i = region_->index_of(c);
    return i >= 0 && covered(i);
  }
  void set(int index) noexcept {
    bits_[index >> 6] |= std::uint64_t{1} << (index & 63);
    ++covered_count_;
  }
  void reset(int index) noexcept {
    bits_[index >> 6] &= ~(std::uint64_t{1} << (index & 63));
    --covered_count_;
  }

  /// Covers the tile's cells; throws InvalidArgument if any is outside or already covered.
  void cover(const Tile& tile);
  void uncover(const Tile& tile);

  bool complete() const noexcept { return covered_count_ == region_->area(); }
  int covered_count() const noexcept { return covered_count_; }

  /// Smallest canonical index >= from that is uncovered, or area().
  int first_uncovered(int from = 0) const noexcept;

  /// Bits [begin, end) packed into words, bit 0 = index begin.
  std::vector<std::uint64_t> extract(int begin, int end) const;

 private:
  const Region* region_;
  std::vector<std::uint64_t> bits_;
  int covered_count_ = 0;
};

/// Uncovered cell minimizing (level, x). Throws NoCellError if the occupancy is complete.
Cell min_uncovered_cell(const Occupancy& occupancy);

/// Tiles rooted at `c` with a length in `lengths` whose cells are all inside the region
/// and uncovered, in lexicographic order of their move words.
std::vector<Tile> placements_at(const Occupancy& occupancy, Cell c, std::span<const int> lengths);

/// Memo key: the minimal uncovered level and the occupancy of the cells whose levels lie in
/// [base_level, base_level + band_levels), in canonical order.
struct FrontierKey {
  int base_level = 0;
  std::vector<std::uint64_t> band;

  friend bool operator==(const FrontierKey&, const FrontierKey&) = default;
};

FrontierKey frontier_key(const Occupancy& occupancy, int band_levels);

struct CountOptions {
  bool memoize = true;
  // Reject placements that leave an uncovered cell with no uncovered neighbour.
  bool prune = true;
  int threads = 1;
  std::size_t memo_limit_bytes = std::size_t{2} << 30;
};

/// Memo cap from RIBBONRY_MEMO_LIMIT (bytes) if set, otherwise `fallback`.
std::size_t memo_limit_from_env(std::size_t fallback);

BigCount count_tilings(const Region& region, int n, const CountOptions& options = {});

/// Counts tilings whose ribbon lengths all belong to `lengths`.
BigCount count_tilings_with_lengths(const Region& region, std::vector<int> lengths,
                                    const CountOptions& options = {});

/// Calls `visit` once per tiling in lexicographic order of shape words at canonical cells.
/// Returning false from `visit` stops the enumeration.
void enumerate_tilings(const Region& region, int n, const std::function<bool(const Tiling&)>& visit);
void enumerate_tilings_with_lengths(const Region& region, std::vector<int> lengths,
                                    const std::function<bool(const Tiling&)>& visit);

/// The first tiling in enumeration order, found without counting. A nonzero `step_limit`
/// caps the search nodes; exceeding it throws ResourceLimit.
std::optional<Tiling> first_tiling(const Region& region, int n, std::uint64_t step_limit = 0);

std::vector<Tiling> all_tilings(const Region& region, int n);

bool is_tileable(const Region& region, int n);

/// Exactly uniform sampler over the n-ribbon tilings of a region. Keeps its completion-count
/// memo between draws.
class TilingSampler {
 public:
  TilingSampler(const Region& region, int n);
  ~TilingSampler();
  TilingSampler(TilingSampler&&) noexcept;
  TilingSampler& operator=(TilingSampler&&) noexcept;

  const BigCount& total() const noexcept { return total_; }

  Tiling sample(std::mt19937_64& rng);

  /// Probability the sampler assigns to `tiling`: the product of the per-step ratios
  /// count(after) / count(before). Zero if `tiling` is not a tiling of the region.
  BigRational probability(const Tiling& tiling);

 private:
  class Engine;
  std::shared_ptr<const Region> region_;
  std::unique_ptr<Engine> engine_;
  BigCount total_;
};

Tiling sample_tiling(const Region& region, int n, std::uint64_t seed);

/// Uniform integer in [0, bound) from a 64-bit engine by rejection.
BigCount uniform_below(const BigCount& bound, std::mt19937_64& rng);

/// Tilings by ribbons of any length.
BigCount count_variable(const Region& region, const CountOptions& options = {});

struct MinimalCount {
  int min_tiles = 0;
  BigCount count;
};

/// Fewest ribbons over all variable-length tilings and how many tilings attain it.
MinimalCount count_minimal(const Region& region);

/// log2(count) / (area / n). Throws UndefinedEntropy if the region is not tileable.
double entropy(const Region& region, int n);
double entropy_from_count(const BigCount& count, int area, int n);

}  // namespace ribbonry
