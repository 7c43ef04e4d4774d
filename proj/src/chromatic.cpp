#include "ribbonry/chromatic.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <sstream>

#include "ribbonry/errors.hpp"

namespace ribbonry {

SimpleGraph underlying_graph(const SGraph& graph) {
  SimpleGraph g{graph.vertex_count(), {}};
  for (const SEdge& e : graph.edges) g.edges.emplace_back(std::min(e.from, e.to), std::max(e.from, e.to));
  return g;
}

SimpleGraph complete_graph(int m) {
  SimpleGraph g{m, {}};
  for (int u = 0; u < m; ++u) {
    for (int v = u + 1; v < m; ++v) g.edges.emplace_back(u, v);
  }
  return g;
}

SimpleGraph path_graph(int m) {
  SimpleGraph g{m, {}};
  for (int u = 0; u + 1 < m; ++u) g.edges.emplace_back(u, u + 1);
  return g;
}

SimpleGraph edgeless_graph(int m) { return SimpleGraph{m, {}}; }

SimpleGraph induced_subgraph(const SimpleGraph& graph, const std::vector<int>& vertices) {
  std::vector<int> remap(static_cast<std::size_t>(graph.vertex_count), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) remap.at(static_cast<std::size_t>(vertices[i])) = static_cast<int>(i);
  SimpleGraph sub{static_cast<int>(vertices.size()), {}};
  for (auto [u, v] : graph.edges) {
    if (remap[u] >= 0 && remap[v] >= 0) sub.edges.emplace_back(remap[u], remap[v]);
  }
  return sub;
}

SimpleGraph stair_graph(int rows, int n) {
  if (rows < 1) throw InvalidArgument("stair graph needs at least one row");
  if (n < 1 || n % 2 == 0) throw InvalidArgument("stair graph is defined for odd n");
  const int m = (n - 1) / 2;
  SimpleGraph g{rows, {}};
  for (int k = 0; k < rows; ++k) {
    for (int i = 1; i <= m && k + i < rows; ++i) g.edges.emplace_back(k, k + i);
  }
  return g;
}

ChromaticPoly::ChromaticPoly(std::vector<BigCount> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.push_back(0);
  trim();
}

void ChromaticPoly::trim() {
  while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
}

ChromaticPoly ChromaticPoly::falling_factorial(int m) {
  ChromaticPoly p = constant(1);
  for (int i = 0; i < m; ++i) p = p * linear(i);
  return p;
}

ChromaticPoly ChromaticPoly::power(int m) {
  std::vector<BigCount> c(static_cast<std::size_t>(m) + 1, 0);
  c.back() = 1;
  return ChromaticPoly(std::move(c));
}

BigCount ChromaticPoly::evaluate(const BigCount& lambda) const {
  BigCount acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * lambda + *it;
  return acc;
}

ChromaticPoly ChromaticPoly::operator+(const ChromaticPoly& o) const {
  std::vector<BigCount> c(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
  return ChromaticPoly(std::move(c));
}

ChromaticPoly ChromaticPoly::operator-(const ChromaticPoly& o) const {
  std::vector<BigCount> c(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i] -= o.coeffs_[i];
  return ChromaticPoly(std::move(c));
}

ChromaticPoly ChromaticPoly::operator*(const ChromaticPoly& o) const {
  std::vector<BigCount> c(coeffs_.size() + o.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  return ChromaticPoly(std::move(c));
}

ChromaticPoly ChromaticPoly::divide_exact(const ChromaticPoly& divisor) const {
  if (divisor.coeffs_.back() != 1) throw InvalidArgument("divisor must be monic");
  const int dd = divisor.degree();
  if (degree() < dd) {
    if (*this == ChromaticPoly()) return ChromaticPoly();
    throw InvalidArgument("polynomial division leaves a remainder");
  }
  std::vector<BigCount> rem = coeffs_;
  std::vector<BigCount> quot(static_cast<std::size_t>(degree() - dd) + 1, 0);
  for (int i = degree(); i >= dd; --i) {
    const BigCount q = rem[i];
    quot[i - dd] = q;
    if (q == 0) continue;
    for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= q * divisor.coeffs_[j];
  }
  for (int i = 0; i < dd; ++i) {
    if (rem[i] != 0) throw InvalidArgument("polynomial division leaves a remainder");
  }
  return ChromaticPoly(std::move(quot));
}

std::string ChromaticPoly::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const BigCount& c = coeffs_[i];
    if (c == 0 && !(i == 0 && first)) continue;
    BigCount mag = c < 0 ? BigCount(-c) : c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (mag != 1 || i == 0) os << mag;
    if (i >= 1) os << "x";
    if (i > 1) os << '^' << i;
    first = false;
  }
  return os.str();
}

namespace {

using Adjacency = std::vector<std::uint64_t>;

class DeletionContraction {
 public:
  ChromaticPoly solve(Adjacency adj) {
    const int v = static_cast<int>(adj.size());
    if (v == 0) return ChromaticPoly::constant(1);
    auto it = memo_.find(adj);
    if (it != memo_.end()) return it->second;

    ChromaticPoly result;
    const auto components = split(adj);
    if (components.size() > 1) {
      result = ChromaticPoly::constant(1);
      for (const auto& part : components) result = result * solve(induce(adj, part));
    } else {
      int edges = 0;
      int pick = -1;
      int pick_degree = v;
      for (int u = 0; u < v; ++u) {
        const int d = std::popcount(adj[u]);
        edges += d;
        if (d > 0 && d < pick_degree) {
          pick = u;
          pick_degree = d;
        }
      }
      edges /= 2;
      if (edges == v * (v - 1) / 2) {
        result = ChromaticPoly::falling_factorial(v);
      } else if (edges == v - 1) {
        // Connected with v - 1 edges: a tree.
        result = ChromaticPoly::linear(0);
        for (int i = 1; i < v; ++i) result = result * ChromaticPoly::linear(1);
      } else if (pick_degree == 1) {
        // A leaf contributes a factor (lambda - 1).
        result = solve(remove_vertex(adj, pick)) * ChromaticPoly::linear(1);
      } else {
        const int w = std::countr_zero(adj[pick]);
        Adjacency deleted = adj;
        deleted[pick] &= ~(std::uint64_t{1} << w);
        deleted[w] &= ~(std::uint64_t{1} << pick);
        result = solve(std::move(deleted)) - solve(contract(adj, pick, w));
      }
    }
    memo_.emplace(std::move(adj), result);
    return result;
  }

 private:
  static std::vector<std::vector<int>> split(const Adjacency& adj) {
    const int v = static_cast<int>(adj.size());
    std::uint64_t unseen = v == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << v) - 1;
    std::vector<std::vector<int>> parts;
    while (unseen != 0) {
      std::uint64_t comp = std::uint64_t{1} << std::countr_zero(unseen);
      std::uint64_t frontier = comp;
      while (frontier != 0) {
        const int u = std::countr_zero(frontier);
        frontier &= frontier - 1;
        const std::uint64_t fresh = adj[u] & ~comp;
        comp |= fresh;
        frontier |= fresh;
      }
      unseen &= ~comp;
      std::vector<int> part;
      for (std::uint64_t b = comp; b != 0; b &= b - 1) part.push_back(std::countr_zero(b));
      parts.push_back(std::move(part));
    }
    return parts;
  }

  static Adjacency induce(const Adjacency& adj, const std::vector<int>& keep) {
    Adjacency out(keep.size(), 0);
    for (std::size_t i = 0; i < keep.size(); ++i) {
      for (std::size_t j = 0; j < keep.size(); ++j) {
        if ((adj[keep[i]] >> keep[j]) & 1U) out[i] |= std::uint64_t{1} << j;
      }
    }
    return out;
  }

  static Adjacency remove_vertex(const Adjacency& adj, int gone) {
    std::vector<int> keep;
    for (int u = 0; u < static_cast<int>(adj.size()); ++u) {
      if (u != gone) keep.push_back(u);
    }
    return induce(adj, keep);
  }

  static Adjacency contract(const Adjacency& adj, int keep, int gone) {
    Adjacency merged = adj;
    merged[keep] |= adj[gone];
    merged[keep] &= ~((std::uint64_t{1} << keep) | (std::uint64_t{1} << gone));
    for (int u = 0; u < static_cast<int>(adj.size()); ++u) {
      if ((adj[gone] >> u) & 1U && u != keep) merged[u] |= std::uint64_t{1} << keep;
    }
    return remove_vertex(merged, gone);
  }

  std::map<Adjacency, ChromaticPoly> memo_;
};

}  // namespace

ChromaticPoly chromatic_polynomial(const SimpleGraph& graph) {
  if (graph.vertex_count < 0 || graph.vertex_count > 64) {
    throw InvalidArgument("chromatic polynomial supports at most 64 vertices");
  }
  Adjacency adj(static_cast<std::size_t>(graph.vertex_count), 0);
  for (auto [u, v] : graph.edges) {
    if (u == v || u < 0 || v < 0 || u >= graph.vertex_count || v >= graph.vertex_count) {
      throw InvalidArgument("graph has a loop or an out-of-range endpoint");
    }
    adj[u] |= std::uint64_t{1} << v;
    adj[v] |= std::uint64_t{1} << u;
  }
  return DeletionContraction().solve(std::move(adj));
}

ChromaticPoly stair_chromatic_closed_form(int rows, int n) {
  if (rows < 1) throw InvalidArgument("stair graph needs at least one row");
  if (n < 1 || n % 2 == 0) throw InvalidArgument("stair graph is defined for odd n");
  const int m = (n - 1) / 2;
  if (rows <= m + 1) return ChromaticPoly::falling_factorial(rows);
  ChromaticPoly p = ChromaticPoly::falling_factorial(m);
  for (int i = m; i < rows; ++i) p = p * ChromaticPoly::linear(m);
  return p;
}

BigCount acyclic_count_via_chromatic(const SimpleGraph& graph) {
  BigCount v = chromatic_polynomial(graph).evaluate(-1);
  return v < 0 ? BigCount(-v) : v;
}

ChromaticPoly clique_sum(const ChromaticPoly& x, const ChromaticPoly& y, int s) {
  return (x * y).divide_exact(ChromaticPoly::falling_factorial(s));
}

}  // namespace ribbonry
