#include "ribbonry/enumerate.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <future>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "ribbonry/errors.hpp"

namespace ribbonry {

Occupancy::Occupancy(const Region& region)
    : region_(&region), bits_(static_cast<std::size_t>(region.area() + 63) / 64, 0) {}

void Occupancy::cover(const Tile& tile) {
  const auto cells = cells_of(tile);
  for (const Cell& c : cells) {
    const int i = region_->index_of(c);
    if (i < 0) throw InvalidArgument("tile leaves the region");
    if (covered(i)) throw InvalidArgument("tile overlaps a covered cell");
  }
  for (const Cell& c : cells) set(region_->index_of(c));
}

void Occupancy::uncover(const Tile& tile) {
  for (const Cell& c : cells_of(tile)) {
    const int i = region_->index_of(c);
    if (i < 0 || !covered(i)) throw InvalidArgument("tile is not covered");
    reset(i);
  }
}

int Occupancy::first_uncovered(int from) const noexcept {
  const int area = region_->area();
  if (from >= area) return area;
  std::size_t w = static_cast<std::size_t>(from) >> 6;
  std::uint64_t word = ~bits_[w] & (~std::uint64_t{0} << (from & 63));
  while (true) {
    if (word != 0) {
      const int idx = static_cast<int>(w * 64) + std::countr_zero(word);
      return std::min(idx, area);
    }
    if (++w >= bits_.size()) return area;
    word = ~bits_[w];
  }
}

std::vector<std::uint64_t> Occupancy::extract(int begin, int end) const {
  std::vector<std::uint64_t> out(static_cast<std::size_t>(std::max(0, end - begin) + 63) / 64, 0);
  for (int i = begin; i < end;) {
    // Copy up to the end of the current source word in one go.
    const int src_off = i & 63;
    const int take = std::min(64 - src_off, end - i);
    std::uint64_t chunk = bits_[static_cast<std::size_t>(i) >> 6] >> src_off;
    if (take < 64) chunk &= (std::uint64_t{1} << take) - 1;
    const int dst = i - begin;
    out[static_cast<std::size_t>(dst) >> 6] |= chunk << (dst & 63);
    if ((dst & 63) + take > 64) out[(static_cast<std::size_t>(dst) >> 6) + 1] |= chunk >> (64 - (dst & 63));
    i += take;
  }
  return out;
}

Cell min_uncovered_cell(const Occupancy& occupancy) {
  const int idx = occupancy.first_uncovered();
  if (idx >= occupancy.region().area()) throw NoCellError("occupancy is complete");
  return occupancy.region().cells()[idx];
}

FrontierKey frontier_key(const Occupancy& occupancy, int band_levels) {
  const Region& r = occupancy.region();
  const int idx = occupancy.first_uncovered();
  if (idx >= r.area()) return {r.max_level() + 1, {}};
  const int level = r.cells()[idx].level();
  return {level, occupancy.extract(r.level_start(level), r.level_start(level + band_levels))};
}

namespace detail {

struct KeyHash {
  std::size_t operator()(const std::vector<std::uint64_t>& key) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ key.size();
    for (std::uint64_t w : key) {
      h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      h *= 0xff51afd7ed558ccdULL;
    }
    return static_cast<std::size_t>(h ^ (h >> 33));
  }
};

using Key = std::vector<std::uint64_t>;

// Depth-first search over canonical placements. The region must outlive the engine.
class SearchEngine {
 public:
  SearchEngine(const Region& region, std::vector<int> lengths, const CountOptions& options)
      : region_(&region), occ_(region), options_(options) {
    std::sort(lengths.begin(), lengths.end());
    lengths.erase(std::unique(lengths.begin(), lengths.end()), lengths.end());
    if (lengths.empty() || lengths.front() < 1) throw InvalidArgument("ribbon lengths must be positive");
    min_len_ = lengths.front();
    max_len_ = std::min({lengths.back(), std::max(region.area(), 1), RibbonShape::kMaxLength});
    allowed_.assign(static_cast<std::size_t>(max_len_) + 1, 0);
    for (int l : lengths) {
      if (l <= max_len_) allowed_[l] = 1;
    }
    // A ribbon longer than the bounding box diagonal cannot fit.
    if (lengths.back() > RibbonShape::kMaxLength && lengths.back() <= region.width() + region.height() - 1) {
      throw InvalidArgument("ribbon lengths above 64 are not supported");
    }
    divisor_ = lengths.size() == 1 ? lengths.front() : 1;
  }

  Occupancy& occupancy() noexcept { return occ_; }
  const Region& region() const noexcept { return *region_; }

  template <typename Emit>
  void for_each_placement(int root_index, Emit&& emit) {
    std::array<int, RibbonShape::kMaxLength> path{};
    walk(root_index, region_->cells()[root_index], 0, 0, path.data(), emit);
  }

  /// Completions of the current occupancy, where every index < from is known covered.
  BigCount count_from(int from) {
    const int c = occ_.first_uncovered(from);
    if (c >= region_->area()) return 1;
    if ((region_->area() - occ_.covered_count()) % divisor_ != 0) return 0;
    Key key;
    if (options_.memoize) {
      key = make_key(c);
      if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    }
    BigCount total = 0;
    for_each_placement(c, [&](const int* path, int len, std::uint64_t) {
      cover(path, len);
      if (!stranded(path, len)) total += count_from(c + 1);
      uncover(path, len);
    });
    if (options_.memoize) remember(std::move(key), total);
    return total;
  }

  /// Depth-first search for one completion, appending its tiles to `out`. Only dead states
  /// are remembered, so finding a tiling never pays for counting them all.
  bool find_from(int from, std::vector<Tile>& out) {
    if (step_limit_ != 0 && ++steps_ > step_limit_) throw ResourceLimit("tiling search exceeded its step limit");
    const int c = occ_.first_uncovered(from);
    if (c >= region_->area()) return true;
    if ((region_->area() - occ_.covered_count()) % divisor_ != 0) return false;
    Key key = make_key(c);
    if (dead_.count(key) != 0) return false;
    bool found = false;
    for_each_placement(c, [&](const int* path, int len, std::uint64_t moves) {
      if (found) return;
      cover(path, len);
      if (!stranded(path, len)) {
        out.push_back(tile_of(path, len, moves));
        found = find_from(c + 1, out);
        if (!found) out.pop_back();
      }
      uncover(path, len);
    });
    if (!found) dead_.insert(std::move(key));
    return found;
  }

  /// Minimum number of tiles to complete the current occupancy and the number of ways.
  std::pair<int, BigCount> minimal_from(int from) {
    const int c = occ_.first_uncovered(from);
    if (c >= region_->area()) return {0, 1};
    Key key = make_key(c);
    if (auto it = min_memo_.find(key); it != min_memo_.end()) return it->second;
    std::pair<int, BigCount> best{-1, 0};
    for_each_placement(c, [&](const int* path, int len, std::uint64_t) {
      cover(path, len);
      auto [tiles, ways] = minimal_from(c + 1);
      uncover(path, len);
      if (tiles < 0) return;
      ++tiles;
      if (best.first < 0 || tiles < best.first) {
        best = {tiles, ways};
      } else if (tiles == best.first) {
        best.second += ways;
      }
    });
    min_memo_.emplace(std::move(key), best);
    return best;
  }

  void cover(const int* path, int len) noexcept {
    for (int i = 0; i < len; ++i) occ_.set(path[i]);
  }
  void uncover(const int* path, int len) noexcept {
    for (int i = 0; i < len; ++i) occ_.reset(path[i]);
  }

  Tile tile_of(const int* path, int len, std::uint64_t moves) const {
    return Tile{region_->cells()[path[0]], RibbonShape(len, moves)};
  }

 private:
  template <typename Emit>
  void walk(int idx, Cell cell, int depth, std::uint64_t moves, int* path, Emit& emit) {
    path[depth] = idx;
    const int len = depth + 1;
    if (allowed_[len]) emit(static_cast<const int*>(path), len, moves);
    if (len >= max_len_) return;
    const Cell east{cell.x + 1, cell.y};
    if (int e = region_->index_of(east); e >= 0 && !occ_.covered(e)) walk(e, east, depth + 1, moves, path, emit);
    const Cell north{cell.x, cell.y + 1};
    if (int nn = region_->index_of(north); nn >= 0 && !occ_.covered(nn)) {
      walk(nn, north, depth + 1, moves | (std::uint64_t{1} << depth), path, emit);
    }
  }

  bool isolated(Cell c) const noexcept {
    static constexpr int dx[4] = {1, -1, 0, 0};
    static constexpr int dy[4] = {0, 0, 1, -1};
    for (int d = 0; d < 4; ++d) {
      const int i = region_->index_of({c.x + dx[d], c.y + dy[d]});
      if (i >= 0 && !occ_.covered(i)) return false;
    }
    return true;
  }

  // True if the freshly covered path leaves an uncovered neighbour that no ribbon of
  // length >= 2 can reach.
  bool stranded(const int* path, int len) const noexcept {
    if (!options_.prune || min_len_ < 2) return false;
    static constexpr int dx[4] = {1, -1, 0, 0};
    static constexpr int dy[4] = {0, 0, 1, -1};
    for (int i = 0; i < len; ++i) {
      const Cell c = region_->cells()[path[i]];
      for (int d = 0; d < 4; ++d) {
        const Cell nb{c.x + dx[d], c.y + dy[d]};
        const int j = region_->index_of(nb);
        if (j >= 0 && !occ_.covered(j) && isolated(nb)) return true;
      }
    }
    return false;
  }

  Key make_key(int c) const {
    const int level = region_->cells()[c].level();
    Key key = occ_.extract(region_->level_start(level), region_->level_start(level + max_len_));
    key.push_back(static_cast<std::uint64_t>(level));
    return key;
  }

  void remember(Key key, const BigCount& value) {
    if (memo_bytes_ >= options_.memo_limit_bytes) return;
    memo_bytes_ += key.size() * 8 + 96 + (boost::multiprecision::msb(value + 1) / 8);
    memo_.emplace(std::move(key), value);
  }

  const Region* region_;
  Occupancy occ_;
  CountOptions options_;
  std::vector<char> allowed_;
  int min_len_ = 1;
  int max_len_ = 1;
  int divisor_ = 1;
  std::unordered_map<Key, BigCount, KeyHash> memo_;
  std::unordered_map<Key, std::pair<int, BigCount>, KeyHash> min_memo_;
  std::unordered_set<Key, KeyHash> dead_;

 public:
  std::uint64_t step_limit_ = 0;
  std::uint64_t steps_ = 0;
  std::size_t memo_bytes_ = 0;
};

}  // namespace detail

std::vector<Tile> placements_at(const Occupancy& occupancy, Cell c, std::span<const int> lengths) {
  const Region& region = occupancy.region();
  const int root = region.index_of(c);
  if (root < 0 || occupancy.covered(root) || lengths.empty()) return {};
  detail::SearchEngine engine(region, {lengths.begin(), lengths.end()}, CountOptions{});
  // Mirror the caller's occupancy into the engine.
  for (int i = 0; i < region.area(); ++i) {
    if (occupancy.covered(i)) engine.occupancy().set(i);
  }
  std::vector<Tile> out;
  engine.for_each_placement(root, [&](const int* path, int len, std::uint64_t moves) {
    out.push_back(engine.tile_of(path, len, moves));
  });
  return out;
}

std::size_t memo_limit_from_env(std::size_t fallback) {
  if (const char* v = std::getenv("RIBBONRY_MEMO_LIMIT"); v != nullptr && *v != '\0') {
    char* end = nullptr;
    const unsigned long long parsed = std::strtoull(v, &end, 10);
    if (end != v && *end == '\0') return static_cast<std::size_t>(parsed);
  }
  return fallback;
}

BigCount count_tilings_with_lengths(const Region& region, std::vector<int> lengths, const CountOptions& options) {
  if (region.empty()) return 1;
  if (options.threads <= 1) {
    detail::SearchEngine engine(region, std::move(lengths), options);
    return engine.count_from(0);
  }
  // Split the branches at the first canonical cell across workers, each with its own memo.
  detail::SearchEngine probe(region, lengths, options);
  std::vector<std::vector<int>> branches;
  probe.for_each_placement(0, [&](const int* path, int len, std::uint64_t) {
    branches.emplace_back(path, path + len);
  });
  const int workers = std::min<int>(options.threads, static_cast<int>(branches.size()));
  std::vector<std::future<BigCount>> parts;
  for (int w = 0; w < workers; ++w) {
    parts.push_back(std::async(std::launch::async, [&, w] {
      detail::SearchEngine engine(region, lengths, options);
      BigCount sum = 0;
      for (std::size_t b = static_cast<std::size_t>(w); b < branches.size(); b += static_cast<std::size_t>(workers)) {
        const auto& path = branches[b];
        engine.cover(path.data(), static_cast<int>(path.size()));
        sum += engine.count_from(1);
        engine.uncover(path.data(), static_cast<int>(path.size()));
      }
      return sum;
    }));
  }
  BigCount total = 0;
  for (auto& p : parts) total += p.get();
  return total;
}

BigCount count_tilings(const Region& region, int n, const CountOptions& options) {
  if (n < 1) throw InvalidArgument("ribbon length must be positive");
  if (region.area() % n != 0) return 0;
  return count_tilings_with_lengths(region, {n}, options);
}

namespace {

class Enumerator {
 public:
  Enumerator(const Region& region, std::vector<int> lengths, const std::function<bool(const Tiling&)>& visit)
      : engine_(region, std::move(lengths), CountOptions{}), visit_(visit) {}

  void run() {
    if (engine_.count_from(0) == 0) return;
    recurse(0);
  }

 private:
  // Returns false once the visitor asks to stop.
  bool recurse(int from) {
    const int c = engine_.occupancy().first_uncovered(from);
    if (c >= engine_.region().area()) return visit_(current_);
    bool keep_going = true;
    engine_.for_each_placement(c, [&](const int* path, int len, std::uint64_t moves) {
      if (!keep_going) return;
      engine_.cover(path, len);
      if (engine_.count_from(c + 1) != 0) {
        current_.tiles.push_back(engine_.tile_of(path, len, moves));
        keep_going = recurse(c + 1);
        current_.tiles.pop_back();
      }
      engine_.uncover(path, len);
    });
    return keep_going;
  }

  detail::SearchEngine engine_;
  const std::function<bool(const Tiling&)>& visit_;
  Tiling current_;
};

}  // namespace

void enumerate_tilings_with_lengths(const Region& region, std::vector<int> lengths,
                                    const std::function<bool(const Tiling&)>& visit) {
  if (region.empty()) {
    visit(Tiling{});
    return;
  }
  Enumerator(region, std::move(lengths), visit).run();
}

void enumerate_tilings(const Region& region, int n, const std::function<bool(const Tiling&)>& visit) {
  if (n < 1) throw InvalidArgument("ribbon length must be positive");
  if (region.area() % n != 0) return;
  enumerate_tilings_with_lengths(region, {n}, visit);
}

std::optional<Tiling> first_tiling(const Region& region, int n, std::uint64_t step_limit) {
  if (n < 1) throw InvalidArgument("ribbon length must be positive");
  if (region.area() % n != 0) return std::nullopt;
  if (region.empty()) return Tiling{};
  detail::SearchEngine engine(region, {n}, CountOptions{});
  engine.step_limit_ = step_limit;
  Tiling t;
  if (!engine.find_from(0, t.tiles)) return std::nullopt;
  return t;
}

std::vector<Tiling> all_tilings(const Region& region, int n) {
  std::vector<Tiling> out;
  enumerate_tilings(region, n, [&](const Tiling& t) {
    out.push_back(t);
    return true;
  });
  return out;
}

bool is_tileable(const Region& region, int n) {
  if (n < 1 || region.area() % n != 0) return false;
  return first_tiling(region, n).has_value();
}

BigCount uniform_below(const BigCount& bound, std::mt19937_64& rng) {
  if (bound <= 0) throw InvalidArgument("uniform_below needs a positive bound");
  if (bound == 1) return 0;
  const unsigned bits = boost::multiprecision::msb(bound - 1) + 1;
  const unsigned words = (bits + 63) / 64;
  while (true) {
    BigCount candidate = 0;
    for (unsigned i = 0; i < words; ++i) {
      candidate <<= 64;
      candidate += rng();
    }
    candidate &= (BigCount(1) << bits) - 1;
    if (candidate < bound) return candidate;
  }
}

class TilingSampler::Engine : public detail::SearchEngine {
 public:
  using detail::SearchEngine::SearchEngine;
};

TilingSampler::TilingSampler(const Region& region, int n) : region_(std::make_shared<const Region>(region)) {
  if (n < 1) throw InvalidArgument("ribbon length must be positive");
  engine_ = std::make_unique<Engine>(*region_, std::vector<int>{n}, CountOptions{});
  total_ = region_->area() % n == 0 ? engine_->count_from(0) : BigCount(0);
  if (total_ == 0) throw NoTilingError("region has no tilings by " + std::to_string(n) + "-ribbons");
}

TilingSampler::~TilingSampler() = default;
TilingSampler::TilingSampler(TilingSampler&& other) noexcept = default;
TilingSampler& TilingSampler::operator=(TilingSampler&& other) noexcept = default;

Tiling TilingSampler::sample(std::mt19937_64& rng) {
  Tiling out;
  std::vector<std::vector<int>> placed;
  int from = 0;
  while (true) {
    const int c = engine_->occupancy().first_uncovered(from);
    if (c >= region_->area()) break;
    const BigCount before = engine_->count_from(c);
    BigCount pick = uniform_below(before, rng);
    bool chosen = false;
    engine_->for_each_placement(c, [&](const int* path, int len, std::uint64_t moves) {
      if (chosen) return;
      engine_->cover(path, len);
      const BigCount after = engine_->count_from(c + 1);
      if (pick < after) {
        chosen = true;
        out.tiles.push_back(engine_->tile_of(path, len, moves));
        placed.emplace_back(path, path + len);
        return;  // leave covered
      }
      pick -= after;
      engine_->uncover(path, len);
    });
    if (!chosen) throw InternalInconsistency("sampler weights do not sum to the completion count");
    from = c + 1;
  }
  for (auto it = placed.rbegin(); it != placed.rend(); ++it) {
    engine_->uncover(it->data(), static_cast<int>(it->size()));
  }
  return out;
}

BigRational TilingSampler::probability(const Tiling& tiling) {
  if (!is_tiling_of(tiling, *region_)) return 0;
  BigRational p = 1;
  std::vector<Tile> placed;
  Occupancy& occ = engine_->occupancy();
  for (const Tile& tile : tiling.tiles) {
    const int c = occ.first_uncovered();
    if (c >= region_->area() || !(region_->cells()[c] == tile.root)) {
      p = 0;
      break;
    }
    const BigCount before = engine_->count_from(c);
    occ.cover(tile);
    placed.push_back(tile);
    const BigCount after = engine_->count_from(c + 1);
    p *= BigRational(after, before);
  }
  for (auto it = placed.rbegin(); it != placed.rend(); ++it) occ.uncover(*it);
  return p;
}

Tiling sample_tiling(const Region& region, int n, std::uint64_t seed) {
  TilingSampler sampler(region, n);
  std::mt19937_64 rng(seed);
  return sampler.sample(rng);
}

BigCount count_variable(const Region& region, const CountOptions& options) {
  std::vector<int> lengths;
  const int longest = std::min(region.area(), region.width() + region.height() - 1);
  for (int l = 1; l <= std::max(longest, 1); ++l) lengths.push_back(l);
  return count_tilings_with_lengths(region, std::move(lengths), options);
}

MinimalCount count_minimal(const Region& region) {
  if (region.empty()) return {0, 1};
  std::vector<int> lengths;
  const int longest = std::min(region.area(), region.width() + region.height() - 1);
  for (int l = 1; l <= longest; ++l) lengths.push_back(l);
  detail::SearchEngine engine(region, std::move(lengths), CountOptions{});
  auto [tiles, ways] = engine.minimal_from(0);
  return {tiles, ways};
}

double entropy_from_count(const BigCount& count, int area, int n) {
  if (count <= 0) throw UndefinedEntropy("entropy is undefined for an untileable region");
  return log2_big(count) / (static_cast<double>(area) / n);
}

double entropy(const Region& region, int n) { return entropy_from_count(count_tilings(region, n), region.area(), n); }

}  // namespace ribbonry
