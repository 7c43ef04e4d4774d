#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ribbonry/bigcount.hpp"
#include "ribbonry/region.hpp"

namespace ribbonry {

/// Tile t_{level, rank}: the rank-th tile (1-based, by root x) among the tiles rooted at `level`.
/// Border vertices carry rank 0.
struct VertexId {
  int level = 0;
  int rank = 1;

  friend bool operator==(const VertexId&, const VertexId&) = default;
};

enum class EdgeClass { same_level, free_edge, forced_n, border };

const char* to_string(EdgeClass c) noexcept;

/// Edge between vertex indices. Same-level and forced edges point from the left tile to the
/// right tile (`from` -> `to`); free edges are stored with from < to and carry no direction.
struct SEdge {
  int from = 0;
  int to = 0;
  EdgeClass kind = EdgeClass::free_edge;

  bool forced() const noexcept { return kind != EdgeClass::free_edge; }
};

/// Sheffield graph with its partial orientation. Tile vertices come first, sorted by
/// (level, rank); border vertices follow, one per entry of `border`.
struct SGraph {
  int ribbon_length = 0;
  std::vector<VertexId> vertices;
  std::vector<SEdge> edges;
  /// Fixed exterior tiles next to the region, in the region's coordinates.
  std::vector<Tile> border;

  int vertex_count() const noexcept { return static_cast<int>(vertices.size()); }
  int tile_vertex_count() const noexcept { return vertex_count() - static_cast<int>(border.size()); }
  bool is_border(int v) const noexcept { return v >= tile_vertex_count(); }
  std::size_t free_edge_count() const noexcept;
  std::size_t forced_edge_count() const noexcept { return edges.size() - free_edge_count(); }
  /// Index of a vertex id, or -1.
  int index_of(VertexId v) const noexcept;
};

/// Graph with the given vertex count whose edges are all free; vertices get ids (0, i + 1).
SGraph free_graph(int vertex_count, const std::vector<std::pair<int, int>>& edges);

/// Direction of every edge: true means from -> to as stored.
struct Orientation {
  std::vector<bool> forward;

  friend bool operator==(const Orientation&, const Orientation&) = default;
};

/// Number of tiles rooted at each level, read from one tiling.
std::map<int, int> tile_levels(const Region& region, int n);
std::map<int, int> tile_levels_of(const Tiling& tiling);

enum class BorderMode {
  omit,     // tile vertices only
  include,  // plus the exterior tiles adjacent to the region, with all their edges forced
};

/// Tiling of the cells around `region` (a padded box minus the region), translated into the
/// region's coordinates. Throws NoTilingError if no padding up to 3n admits one.
Tiling exterior_tiling(const Region& region, int n);

/// Graph of `region` for n-ribbon tilings. Forced directions are read off the first tiling in
/// enumeration order.
SGraph build_graph(const Region& region, int n, BorderMode border = BorderMode::omit);
SGraph build_graph_from(const Tiling& reference, int n);
/// As above, with `exterior` supplying the border vertices.
SGraph build_graph_from(const Tiling& reference, const Tiling& exterior, const Region& region, int n);

/// Left-of relation between two tiles by the light rule: the tile whose cell has the smaller x
/// on a shared level is to the left. Empty if the tiles share no level; throws
/// InternalInconsistency if shared levels disagree.
std::optional<bool> left_of(const Tile& a, const Tile& b);

/// Whether the forced rule, evaluated on `tiling`, points forced edge `edge` from -> to.
bool forced_rule_forward(const Tiling& tiling, const SGraph& graph, std::size_t edge);

/// Orientation induced by a tiling: the light rule on pairs sharing a level, the level-gap-n
/// rule otherwise. Agreement with tau is checked separately by extends_tau.
Orientation orientation_from_tiling(const Tiling& tiling, const SGraph& graph);

bool is_acyclic(const SGraph& graph, const Orientation& orientation);
bool extends_tau(const SGraph& graph, const Orientation& orientation);

inline constexpr std::size_t kDefaultFreeEdgeLimit = 30;

/// Acyclic orientations that agree with tau. Throws ResourceLimit if the graph has more than
/// `free_edge_limit` free edges.
BigCount count_admissible_orientations(const SGraph& graph, std::size_t free_edge_limit = kDefaultFreeEdgeLimit);

/// Subgraph on the vertices with level <= max_level, edges and classes inherited.
SGraph levels_up_to(const SGraph& graph, int max_level);

struct BijectionReport {
  bool ok = false;
  BigCount tilings;
  BigCount orientations;
  bool injective = false;
  std::string detail;
};

BijectionReport verify_bijection(const Region& region, int n, std::size_t free_edge_limit = kDefaultFreeEdgeLimit,
                                 BorderMode border = BorderMode::omit);

/// Vertex map g1 -> g2 preserving edges, edge classes and tau directions.
std::optional<std::vector<int>> find_isomorphism(const SGraph& g1, const SGraph& g2);
inline bool graphs_isomorphic(const SGraph& g1, const SGraph& g2) { return find_isomorphism(g1, g2).has_value(); }

struct GrowthRow {
  int level = 0;
  int vertices_at_level = 0;   // T_l
  int window_vertices = 0;     // S_l, levels l - n + 1 .. l
  BigCount orientations;       // |A(H_l)|
  BigCount previous;           // |A(H_{l-1})|
  BigCount binomial_bound;     // C(S_l, T_l)
  bool within_binomial = false;
  bool exponential_applies = false;  // l <= L
  double growth = 0;                 // g_l as a double, for display
  double exponential_bound = 0;      // (e n)^{T_l}
  bool within_exponential = true;
};

struct GrowthReport {
  int max_level = 0;   // l_max
  int widest = 0;      // T_max
  int last_widest = 0; // L
  std::vector<GrowthRow> rows;
  bool ok = false;
};

/// Growth factors g_l = |A(H_l)| / |A(H_{l-1})| of a rectangle's graph against the binomial
/// and (e n)^{T_l} bounds. Requires n to divide the row count.
GrowthReport verify_growth_bounds(const Region& rectangle, int n, std::size_t free_edge_limit = 64);

/// Graphviz rendering: forced edges solid and directed, free edges dashed (directed by
/// `orientation` when given).
std::string to_dot(const SGraph& graph, const Orientation* orientation = nullptr);

}  // namespace ribbonry
