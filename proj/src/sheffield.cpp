#include "ribbonry/sheffield.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <set>
#include <sstream>

#include "ribbonry/enumerate.hpp"
#include "ribbonry/errors.hpp"

namespace ribbonry {

const char* to_string(EdgeClass c) noexcept {
  switch (c) {
    case EdgeClass::same_level:
      return "same_level";
    case EdgeClass::free_edge:
      return "free";
    case EdgeClass::forced_n:
      return "forced_n";
    case EdgeClass::border:
      return "border";
  }
  return "?";
}

std::size_t SGraph::free_edge_count() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(edges.begin(), edges.end(), [](const SEdge& e) { return !e.forced(); }));
}

int SGraph::index_of(VertexId v) const noexcept {
  for (int i = 0; i < vertex_count(); ++i) {
    if (vertices[i] == v) return i;
  }
  return -1;
}

SGraph free_graph(int vertex_count, const std::vector<std::pair<int, int>>& edges) {
  SGraph g;
  for (int i = 0; i < vertex_count; ++i) g.vertices.push_back({0, i + 1});
  for (auto [a, b] : edges) {
    if (a == b || a < 0 || b < 0 || a >= vertex_count || b >= vertex_count) {
      throw InvalidArgument("bad edge in free_graph");
    }
    g.edges.push_back({std::min(a, b), std::max(a, b), EdgeClass::free_edge});
  }
  return g;
}

std::map<int, int> tile_levels_of(const Tiling& tiling) {
  std::map<int, int> levels;
  for (const Tile& t : tiling.tiles) ++levels[t.level()];
  return levels;
}

namespace {

Tiling reference_tiling(const Region& region, int n) {
  std::optional<Tiling> found = first_tiling(region, n);
  if (!found) throw NoTilingError("region has no tilings by " + std::to_string(n) + "-ribbons");
  return *found;
}

// Column of the tile's cell on each level it covers, indexed from the root level.
std::vector<int> columns_by_level(const Tile& t) {
  std::vector<int> xs;
  for (const Cell& c : cells_of(t)) xs.push_back(c.x);
  return xs;
}

}  // namespace

std::map<int, int> tile_levels(const Region& region, int n) { return tile_levels_of(reference_tiling(region, n)); }

std::optional<bool> left_of(const Tile& a, const Tile& b) {
  const int lo = std::max(a.level(), b.level());
  const int hi = std::min(a.level() + a.shape.length(), b.level() + b.shape.length());
  if (lo >= hi) return std::nullopt;
  const auto xa = columns_by_level(a);
  const auto xb = columns_by_level(b);
  std::optional<bool> result;
  for (int l = lo; l < hi; ++l) {
    const int ca = xa[l - a.level()];
    const int cb = xb[l - b.level()];
    if (ca == cb) throw InternalInconsistency("tiles overlap on a shared level");
    const bool a_left = ca < cb;
    if (result && *result != a_left) throw InternalInconsistency("light rule disagrees across shared levels");
    result = a_left;
  }
  return result;
}

namespace {

// Forced rule for tiles whose levels differ by exactly n: the upper tile is right of the
// lower one iff its root lies in a column strictly right of the lower tile's top cell.
bool lower_left_of_upper(const Tile& lower, const Tile& upper) {
  const Cell top = cells_of(lower).back();
  return upper.root.x > top.x;
}

void check_matches(const Tiling& tiling, const SGraph& graph) {
  if (static_cast<int>(tiling.tiles.size()) != graph.tile_vertex_count()) {
    throw InvalidArgument("tiling has a different tile count than the graph has vertices");
  }
  for (std::size_t i = 0; i < tiling.tiles.size(); ++i) {
    if (tiling.tiles[i].level() != graph.vertices[i].level) {
      throw InvalidArgument("tiling's per-level tile counts differ from the graph's");
    }
    if (i > 0 && !canonical_less(tiling.tiles[i - 1].root, tiling.tiles[i].root)) {
      throw InvalidArgument("tiling is not in canonical order");
    }
  }
}

// Whether `a` is left of `b`: the light rule when they share a level, the adjacent-levels
// rule when one ends on the level just below the other's root. Empty otherwise.
std::optional<bool> relation(const Tile& a, const Tile& b) {
  if (b.level() == a.level() + a.shape.length()) return lower_left_of_upper(a, b);
  if (a.level() == b.level() + b.shape.length()) return !lower_left_of_upper(b, a);
  return left_of(a, b);
}

bool left_relation(const Tile& a, const Tile& b) {
  const auto rel = relation(a, b);
  if (!rel) throw InternalInconsistency("tiles at levels " + std::to_string(a.level()) + " and " +
                                        std::to_string(b.level()) + " are incomparable");
  return *rel;
}

bool touches(const Tile& tile, const Region& region) {
  static constexpr int kDx[6] = {1, -1, 0, 0, 1, -1};
  static constexpr int kDy[6] = {0, 0, 1, -1, -1, 1};
  for (const Cell& c : cells_of(tile)) {
    for (int d = 0; d < 6; ++d) {
      if (region.contains({c.x + kDx[d], c.y + kDy[d]})) return true;
    }
  }
  return false;
}

const Tile& tile_at(const Tiling& tiling, const SGraph& graph, int v) {
  return graph.is_border(v) ? graph.border[v - graph.tile_vertex_count()] : tiling.tiles[v];
}

}  // namespace

namespace {

// Covers every exterior cell next to the region with disjoint n-ribbons that avoid it.
class CollarBuilder {
 public:
  CollarBuilder(const Region& region, int n, bool shorter) : region_(region) {
    for (int len = n; len >= (shorter ? 1 : n); --len) {
      for (const RibbonShape& s : all_shapes(len)) shapes_.push_back(s);
    }
    static constexpr int kDx[6] = {1, -1, 0, 0, 1, -1};
    static constexpr int kDy[6] = {0, 0, 1, -1, -1, 1};
    std::set<std::pair<int, int>> seen;
    for (const Cell& c : region.cells()) {
      for (int d = 0; d < 6; ++d) {
        const Cell nb{c.x + kDx[d], c.y + kDy[d]};
        if (!region.contains(nb) && seen.emplace(nb.level(), nb.x).second) must_.push_back(nb);
      }
    }
    std::sort(must_.begin(), must_.end(), canonical_less);
  }

  std::optional<Tiling> run(std::uint64_t budget) {
    budget_ = budget;
    steps_ = 0;
    tiles_.clear();
    used_.clear();
    if (!place(0)) return std::nullopt;
    Tiling t{tiles_};
    canonicalize(t);
    return t;
  }

  bool exhausted() const noexcept { return steps_ > budget_; }

 private:
  bool place(std::size_t next) {
    while (next < must_.size() && used_.count({must_[next].x, must_[next].y}) != 0) ++next;
    if (next == must_.size()) return true;
    if (++steps_ > budget_) return false;
    const Cell m = must_[next];
    for (const RibbonShape& shape : shapes_) {
      const auto offsets = cells_of(Tile{Cell{0, 0}, shape});
      for (const Cell& off : offsets) {
        const Tile tile{Cell{m.x - off.x, m.y - off.y}, shape};
        const auto cells = cells_of(tile);
        const bool fits = std::none_of(cells.begin(), cells.end(), [&](const Cell& c) {
          return region_.contains(c) || used_.count({c.x, c.y}) != 0;
        });
        if (!fits) continue;
        for (const Cell& c : cells) used_.emplace(c.x, c.y);
        tiles_.push_back(tile);
        if (place(next + 1)) return true;
        tiles_.pop_back();
        for (const Cell& c : cells) used_.erase({c.x, c.y});
        if (steps_ > budget_) return false;
      }
    }
    return false;
  }

  const Region& region_;
  std::vector<RibbonShape> shapes_;
  std::vector<Cell> must_;
  std::vector<Tile> tiles_;
  std::set<std::pair<int, int>> used_;
  std::uint64_t budget_ = 0;
  std::uint64_t steps_ = 0;
};

}  // namespace

Tiling exterior_tiling(const Region& region, int n) {
  if (n < 1) throw InvalidArgument("ribbon length must be positive");
  if (n > 20) throw InvalidArgument("exterior tiling supports ribbon lengths up to 20");
  // Pockets that no n-ribbon can enter from outside get shorter ribbons, down to squares.
  for (bool shorter : {false, true}) {
    CollarBuilder builder(region, n, shorter);
    for (std::uint64_t budget = 4096; budget <= (std::uint64_t{1} << 24); budget *= 8) {
      if (auto t = builder.run(budget)) return *t;
      if (!builder.exhausted()) break;
    }
  }
  throw NoTilingError("no ribbon collar found around the region");
}

SGraph build_graph_from(const Tiling& reference, int n) {
  if (n < 1) throw InvalidArgument("ribbon length must be positive");
  SGraph g;
  g.ribbon_length = n;
  const auto& tiles = reference.tiles;
  // Canonical tile order is (level, rank) order.
  for (std::size_t i = 0; i < tiles.size(); ++i) {
    const int rank = (i > 0 && tiles[i - 1].level() == tiles[i].level()) ? g.vertices.back().rank + 1 : 1;
    g.vertices.push_back({tiles[i].level(), rank});
  }
  for (int u = 0; u < g.vertex_count(); ++u) {
    for (int v = u + 1; v < g.vertex_count(); ++v) {
      const int gap = g.vertices[v].level - g.vertices[u].level;
      if (gap > n) break;
      if (gap == 0) {
        g.edges.push_back({u, v, EdgeClass::same_level});
      } else if (gap == n) {
        if (lower_left_of_upper(tiles[u], tiles[v])) {
          g.edges.push_back({u, v, EdgeClass::forced_n});
        } else {
          g.edges.push_back({v, u, EdgeClass::forced_n});
        }
      } else {
        g.edges.push_back({u, v, EdgeClass::free_edge});
      }
    }
  }
  return g;
}

SGraph build_graph_from(const Tiling& reference, const Tiling& exterior, const Region& region, int n) {
  SGraph g = build_graph_from(reference, n);
  const int k = g.vertex_count();
  for (const Tile& t : exterior.tiles) {
    if (touches(t, region)) g.border.push_back(t);
  }
  for (std::size_t b = 0; b < g.border.size(); ++b) {
    const Tile& e = g.border[b];
    const int vb = k + static_cast<int>(b);
    g.vertices.push_back({e.level(), 0});
    for (int v = 0; v < k; ++v) {
      const auto v_left = relation(reference.tiles[v], e);
      if (v_left) g.edges.push_back({*v_left ? v : vb, *v_left ? vb : v, EdgeClass::border});
    }
    for (std::size_t c = 0; c < b; ++c) {
      const int vc = k + static_cast<int>(c);
      const auto f_left = relation(g.border[c], e);
      if (f_left) g.edges.push_back({*f_left ? vc : vb, *f_left ? vb : vc, EdgeClass::border});
    }
  }
  return g;
}

SGraph build_graph(const Region& region, int n, BorderMode border) {
  const Tiling reference = reference_tiling(region, n);
  if (border == BorderMode::omit) return build_graph_from(reference, n);
  return build_graph_from(reference, exterior_tiling(region, n), region, n);
}

bool forced_rule_forward(const Tiling& tiling, const SGraph& graph, std::size_t edge) {
  check_matches(tiling, graph);
  const SEdge& e = graph.edges.at(edge);
  const int lower = graph.vertices[e.from].level < graph.vertices[e.to].level ? e.from : e.to;
  const int upper = lower == e.from ? e.to : e.from;
  const bool lower_left = lower_left_of_upper(tiling.tiles[lower], tiling.tiles[upper]);
  return lower_left == (lower == e.from);
}

Orientation orientation_from_tiling(const Tiling& tiling, const SGraph& graph) {
  check_matches(tiling, graph);
  Orientation o;
  o.forward.resize(graph.edges.size());
  for (std::size_t i = 0; i < graph.edges.size(); ++i) {
    const SEdge& e = graph.edges[i];
    o.forward[i] = left_relation(tile_at(tiling, graph, e.from), tile_at(tiling, graph, e.to));
  }
  return o;
}

namespace {

// Directed edges of an orientation as adjacency lists.
std::vector<std::vector<int>> directed(const SGraph& g, const Orientation& o) {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(g.vertex_count()));
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    const SEdge& e = g.edges[i];
    if (o.forward[i]) {
      out[e.from].push_back(e.to);
    } else {
      out[e.to].push_back(e.from);
    }
  }
  return out;
}

}  // namespace

bool is_acyclic(const SGraph& graph, const Orientation& orientation) {
  if (orientation.forward.size() != graph.edges.size()) return false;
  const auto out = directed(graph, orientation);
  std::vector<int> indeg(out.size(), 0);
  for (const auto& row : out) {
    for (int v : row) ++indeg[v];
  }
  std::vector<int> ready;
  for (std::size_t v = 0; v < out.size(); ++v) {
    if (indeg[v] == 0) ready.push_back(static_cast<int>(v));
  }
  std::size_t seen = 0;
  while (!ready.empty()) {
    const int u = ready.back();
    ready.pop_back();
    ++seen;
    for (int v : out[u]) {
      if (--indeg[v] == 0) ready.push_back(v);
    }
  }
  return seen == out.size();
}

bool extends_tau(const SGraph& graph, const Orientation& orientation) {
  if (orientation.forward.size() != graph.edges.size()) return false;
  for (std::size_t i = 0; i < graph.edges.size(); ++i) {
    if (graph.edges[i].forced() && !orientation.forward[i]) return false;
  }
  return true;
}

namespace {

// Backtracking over free-edge directions with a dynamic topological order (Pearce-Kelly).
// Removing an edge never invalidates a topological order, so undo is a pop.
class OrientationCounter {
 public:
  explicit OrientationCounter(const SGraph& g)
      : out_(static_cast<std::size_t>(g.vertex_count())),
        in_(static_cast<std::size_t>(g.vertex_count())),
        ord_(static_cast<std::size_t>(g.vertex_count())),
        mark_(static_cast<std::size_t>(g.vertex_count()), 0) {
    for (int v = 0; v < g.vertex_count(); ++v) ord_[v] = v;
    for (const SEdge& e : g.edges) {
      if (e.forced()) {
        if (!try_add(e.from, e.to)) tau_cyclic_ = true;
      } else {
        free_.push_back(e);
      }
    }
    // Close cycles early: handle edges among low vertices first.
    std::sort(free_.begin(), free_.end(), [](const SEdge& a, const SEdge& b) {
      return std::pair(std::max(a.from, a.to), std::min(a.from, a.to)) <
             std::pair(std::max(b.from, b.to), std::min(b.from, b.to));
    });
  }

  BigCount count() {
    if (tau_cyclic_) return 0;
    leaves_ = 0;
    big_ = 0;
    recurse(0);
    return big_ + leaves_;
  }

 private:
  void recurse(std::size_t i) {
    if (i == free_.size()) {
      if (++leaves_ == 0) big_ += BigCount(1) << 64;
      return;
    }
    const SEdge& e = free_[i];
    if (try_add(e.from, e.to)) {
      recurse(i + 1);
      remove(e.from, e.to);
    }
    if (try_add(e.to, e.from)) {
      recurse(i + 1);
      remove(e.to, e.from);
    }
  }

  bool try_add(int u, int v) {
    if (ord_[u] < ord_[v]) {
      link(u, v);
      return true;
    }
    const int lb = ord_[v];
    const int ub = ord_[u];
    forward_.clear();
    backward_.clear();
    if (!dfs_forward(v, ub, u)) {
      for (int w : forward_) mark_[w] = 0;
      return false;
    }
    dfs_backward(u, lb);
    for (int w : forward_) mark_[w] = 0;
    for (int w : backward_) mark_[w] = 0;
    reorder();
    link(u, v);
    return true;
  }

  bool dfs_forward(int start, int ub, int target) {
    std::vector<int> stack{start};
    mark_[start] = 1;
    forward_.push_back(start);
    while (!stack.empty()) {
      const int w = stack.back();
      stack.pop_back();
      for (int x : out_[w]) {
        if (x == target) return false;
        if (!mark_[x] && ord_[x] < ub) {
          mark_[x] = 1;
          forward_.push_back(x);
          stack.push_back(x);
        }
      }
    }
    return true;
  }

  void dfs_backward(int start, int lb) {
    std::vector<int> stack{start};
    mark_[start] = 1;
    backward_.push_back(start);
    while (!stack.empty()) {
      const int w = stack.back();
      stack.pop_back();
      for (int x : in_[w]) {
        if (!mark_[x] && ord_[x] > lb) {
          mark_[x] = 1;
          backward_.push_back(x);
          stack.push_back(x);
        }
      }
    }
  }

  void reorder() {
    auto by_ord = [this](int a, int b) { return ord_[a] < ord_[b]; };
    std::sort(forward_.begin(), forward_.end(), by_ord);
    std::sort(backward_.begin(), backward_.end(), by_ord);
    slots_.clear();
    for (int w : backward_) slots_.push_back(ord_[w]);
    for (int w : forward_) slots_.push_back(ord_[w]);
    std::sort(slots_.begin(), slots_.end());
    std::size_t k = 0;
    for (int w : backward_) ord_[w] = slots_[k++];
    for (int w : forward_) ord_[w] = slots_[k++];
  }

  void link(int u, int v) {
    out_[u].push_back(v);
    in_[v].push_back(u);
  }

  void remove(int u, int v) {
    // Edges are removed in reverse order of insertion.
    out_[u].pop_back();
    in_[v].pop_back();
  }

  std::vector<std::vector<int>> out_;
  std::vector<std::vector<int>> in_;
  std::vector<int> ord_;
  std::vector<char> mark_;
  std::vector<int> forward_;
  std::vector<int> backward_;
  std::vector<int> slots_;
  std::vector<SEdge> free_;
  bool tau_cyclic_ = false;
  std::uint64_t leaves_ = 0;
  BigCount big_ = 0;
};

}  // namespace

BigCount count_admissible_orientations(const SGraph& graph, std::size_t free_edge_limit) {
  const std::size_t free_edges = graph.free_edge_count();
  if (free_edges > free_edge_limit) {
    throw ResourceLimit("graph has " + std::to_string(free_edges) + " free edges, limit is " +
                        std::to_string(free_edge_limit));
  }
  return OrientationCounter(graph).count();
}

SGraph levels_up_to(const SGraph& graph, int max_level) {
  SGraph sub;
  sub.ribbon_length = graph.ribbon_length;
  std::vector<int> remap(static_cast<std::size_t>(graph.vertex_count()), -1);
  for (int v = 0; v < graph.vertex_count(); ++v) {
    if (graph.vertices[v].level <= max_level) {
      remap[v] = sub.vertex_count();
      sub.vertices.push_back(graph.vertices[v]);
      if (graph.is_border(v)) sub.border.push_back(graph.border[v - graph.tile_vertex_count()]);
    }
  }
  for (const SEdge& e : graph.edges) {
    if (remap[e.from] >= 0 && remap[e.to] >= 0) sub.edges.push_back({remap[e.from], remap[e.to], e.kind});
  }
  return sub;
}

BijectionReport verify_bijection(const Region& region, int n, std::size_t free_edge_limit, BorderMode border) {
  BijectionReport report;
  const SGraph graph = build_graph(region, n, border);
  report.orientations = count_admissible_orientations(graph, free_edge_limit);
  std::map<std::vector<bool>, Tiling> seen;
  report.injective = true;
  BigCount tilings = 0;
  enumerate_tilings(region, n, [&](const Tiling& t) {
    ++tilings;
    Orientation o;
    try {
      o = orientation_from_tiling(t, graph);
    } catch (const std::exception& ex) {
      if (report.detail.empty()) report.detail = std::string("tiling ") + tilings.str() + ": " + ex.what();
      report.injective = false;
      return true;
    }
    if (!extends_tau(graph, o) || !is_acyclic(graph, o)) {
      if (report.detail.empty()) {
        report.detail = "tiling " + tilings.str() + " induces an orientation that is cyclic or disagrees with tau";
      }
      report.injective = false;
      return true;
    }
    auto [it, inserted] = seen.emplace(o.forward, t);
    if (!inserted) {
      report.injective = false;
      if (report.detail.empty()) report.detail = "two tilings induce the same orientation (tiling " + tilings.str() + ")";
    }
    return true;
  });
  report.tilings = tilings;
  report.ok = report.injective && report.tilings == report.orientations;
  if (report.ok) {
    report.detail = "tilings " + report.tilings.str() + " = orientations " + report.orientations.str();
  } else if (report.detail.empty()) {
    report.detail = "tilings " + report.tilings.str() + " != orientations " + report.orientations.str();
  }
  return report;
}

namespace {

// Pairwise relation code: 0 none, 1 free, 2/3 same-level out/in, 4/5 forced out/in,
// 6/7 border out/in.
std::vector<std::vector<int>> relation_codes(const SGraph& g) {
  std::vector<std::vector<int>> code(static_cast<std::size_t>(g.vertex_count()),
                                     std::vector<int>(static_cast<std::size_t>(g.vertex_count()), 0));
  for (const SEdge& e : g.edges) {
    switch (e.kind) {
      case EdgeClass::free_edge:
        code[e.from][e.to] = code[e.to][e.from] = 1;
        break;
      case EdgeClass::same_level:
        code[e.from][e.to] = 2;
        code[e.to][e.from] = 3;
        break;
      case EdgeClass::forced_n:
        code[e.from][e.to] = 4;
        code[e.to][e.from] = 5;
        break;
      case EdgeClass::border:
        code[e.from][e.to] = 6;
        code[e.to][e.from] = 7;
        break;
    }
  }
  return code;
}

std::vector<std::array<int, 8>> signatures(const std::vector<std::vector<int>>& code) {
  std::vector<std::array<int, 8>> sig(code.size(), std::array<int, 8>{});
  for (std::size_t u = 0; u < code.size(); ++u) {
    for (std::size_t v = 0; v < code.size(); ++v) {
      if (u != v) ++sig[u][code[u][v]];
    }
  }
  return sig;
}

class IsoSearch {
 public:
  IsoSearch(const SGraph& a, const SGraph& b)
      : ca_(relation_codes(a)), cb_(relation_codes(b)), sa_(signatures(ca_)), sb_(signatures(cb_)) {
    const int n = a.vertex_count();
    map_.assign(static_cast<std::size_t>(n), -1);
    used_.assign(static_cast<std::size_t>(n), 0);
    // Vertices are already in level order; visiting them so keeps each new vertex adjacent
    // to mapped ones.
    for (int v = 0; v < n; ++v) order_.push_back(v);
  }

  bool run() { return extend(0); }
  const std::vector<int>& mapping() const { return map_; }

 private:
  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const int u = order_[depth];
    for (std::size_t cand = 0; cand < cb_.size(); ++cand) {
      if (used_[cand] || sa_[u] != sb_[cand]) continue;
      bool consistent = true;
      for (std::size_t d = 0; d < depth && consistent; ++d) {
        const int w = order_[d];
        consistent = ca_[u][w] == cb_[cand][map_[w]];
      }
      if (!consistent) continue;
      map_[u] = static_cast<int>(cand);
      used_[cand] = 1;
      if (extend(depth + 1)) return true;
      used_[cand] = 0;
      map_[u] = -1;
    }
    return false;
  }

  std::vector<std::vector<int>> ca_, cb_;
  std::vector<std::array<int, 8>> sa_, sb_;
  std::vector<int> order_;
  std::vector<int> map_;
  std::vector<char> used_;
};

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const SGraph& g1, const SGraph& g2) {
  if (g1.vertex_count() != g2.vertex_count() || g1.edges.size() != g2.edges.size() ||
      g1.free_edge_count() != g2.free_edge_count()) {
    return std::nullopt;
  }
  IsoSearch search(g1, g2);
  if (!search.run()) return std::nullopt;
  return search.mapping();
}

GrowthReport verify_growth_bounds(const Region& rectangle, int n, std::size_t free_edge_limit) {
  using Float = boost::multiprecision::cpp_bin_float_50;
  if (rectangle.area() != rectangle.width() * rectangle.height()) {
    throw InvalidArgument("growth bounds are stated for rectangles");
  }
  if (n < 1 || rectangle.height() % n != 0) throw InvalidArgument("n must divide the row count");
  const SGraph g = build_graph(rectangle, n);

  GrowthReport report;
  std::map<int, int> per_level;
  for (const VertexId& v : g.vertices) ++per_level[v.level];
  report.max_level = g.vertices.empty() ? 0 : g.vertices.back().level;
  std::vector<int> t(static_cast<std::size_t>(report.max_level) + 1, 0);
  for (auto [level, count] : per_level) t[level] = count;
  report.widest = *std::max_element(t.begin(), t.end());
  for (int l = 0; l <= report.max_level; ++l) {
    if (t[l] == report.widest) report.last_widest = l;
  }

  const Float en = boost::multiprecision::exp(Float(1)) * n;
  BigCount previous = count_admissible_orientations(levels_up_to(g, 0), free_edge_limit);
  report.ok = true;
  for (int l = 1; l <= report.max_level; ++l) {
    GrowthRow row;
    row.level = l;
    row.vertices_at_level = t[l];
    for (int k = std::max(0, l - n + 1); k <= l; ++k) row.window_vertices += t[k];
    row.previous = previous;
    row.orientations = count_admissible_orientations(levels_up_to(g, l), free_edge_limit);
    row.binomial_bound = binomial(static_cast<unsigned>(row.window_vertices), static_cast<unsigned>(row.vertices_at_level));
    // g_l <= C(S_l, T_l), compared without division.
    row.within_binomial = row.orientations <= row.binomial_bound * row.previous;
    row.growth = static_cast<double>(Float(row.orientations) / Float(row.previous));
    const Float exp_bound = boost::multiprecision::pow(en, row.vertices_at_level);
    row.exponential_bound = static_cast<double>(exp_bound);
    row.exponential_applies = l <= report.last_widest;
    if (row.exponential_applies) row.within_exponential = Float(row.orientations) <= exp_bound * Float(row.previous);
    report.ok = report.ok && row.within_binomial && row.within_exponential;
    previous = row.orientations;
    report.rows.push_back(std::move(row));
  }
  return report;
}

std::string to_dot(const SGraph& graph, const Orientation* orientation) {
  std::ostringstream os;
  os << "digraph sheffield {\n";
  os << "  node [shape=circle];\n";
  for (int v = 0; v < graph.vertex_count(); ++v) {
    os << "  v" << v << " [label=\"" << graph.vertices[v].level << "_" << graph.vertices[v].rank << "\"];\n";
  }
  for (std::size_t i = 0; i < graph.edges.size(); ++i) {
    const SEdge& e = graph.edges[i];
    if (e.forced()) {
      os << "  v" << e.from << " -> v" << e.to << " [style=solid];\n";
    } else if (orientation != nullptr) {
      const bool fwd = orientation->forward.at(i);
      os << "  v" << (fwd ? e.from : e.to) << " -> v" << (fwd ? e.to : e.from) << " [style=dashed];\n";
    } else {
      os << "  v" << e.from << " -> v" << e.to << " [style=dashed, dir=none];\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace ribbonry
