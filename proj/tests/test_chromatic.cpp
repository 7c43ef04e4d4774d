#include <doctest.h>

#include <random>

#include "oracles/oracles.hpp"
#include "ribbonry/chromatic.hpp"
#include "ribbonry/errors.hpp"

using namespace ribbonry;

TEST_CASE("polynomial arithmetic") {
  auto p = ChromaticPoly::falling_factorial(3);
  CHECK(p.to_string() == "x^3 - 3x^2 + 2x");
  CHECK(p.degree() == 3);
  CHECK(p.evaluate(5) == 60);
  CHECK(ChromaticPoly::power(2) * ChromaticPoly::linear(1) == ChromaticPoly({0, 0, -1, 1}));
  CHECK((p - p) == ChromaticPoly());
  CHECK((p + p).evaluate(3) == 12);
  CHECK((p * ChromaticPoly::linear(3)).divide_exact(ChromaticPoly::linear(3)) == p);
  CHECK_THROWS_AS(ChromaticPoly::power(2).divide_exact(ChromaticPoly::linear(1)), InvalidArgument);
  CHECK_THROWS_AS(p.divide_exact(ChromaticPoly({1, 2})), InvalidArgument);
}

TEST_CASE("base cases") {
  for (int m = 0; m <= 7; ++m) {
    CHECK(chromatic_polynomial(complete_graph(m)) == ChromaticPoly::falling_factorial(m));
    CHECK(chromatic_polynomial(edgeless_graph(m)) == ChromaticPoly::power(m));
  }
  CHECK(chromatic_polynomial(path_graph(3)).to_string() == "x^3 - 2x^2 + x");
  CHECK(acyclic_count_via_chromatic(complete_graph(4)) == 24);
  CHECK(acyclic_count_via_chromatic(path_graph(3)) == 4);
  CHECK_THROWS_AS(chromatic_polynomial(SimpleGraph{2, {{0, 0}}}), InvalidArgument);
  CHECK_THROWS_AS(chromatic_polynomial(SimpleGraph{2, {{0, 2}}}), InvalidArgument);
}

TEST_CASE("stair graphs") {
  SimpleGraph g = stair_graph(5, 5);
  CHECK(g.vertex_count == 5);
  CHECK(g.edges.size() == 7);
  CHECK(acyclic_count_via_chromatic(g) == 54);
  for (int n : {3, 5, 7})
    for (int M = 1; M <= 10; ++M) CHECK(chromatic_polynomial(stair_graph(M, n)) == stair_chromatic_closed_form(M, n));
  CHECK_THROWS_AS(stair_graph(3, 4), InvalidArgument);
  CHECK_THROWS_AS(stair_graph(0, 3), InvalidArgument);
}

TEST_CASE("induced and underlying graphs") {
  SimpleGraph k4 = complete_graph(4);
  SimpleGraph tri = induced_subgraph(k4, {0, 2, 3});
  CHECK(tri.vertex_count == 3);
  CHECK(tri.edges.size() == 3);
  SGraph sg = free_graph(3, {{0, 1}, {1, 2}});
  SimpleGraph u = underlying_graph(sg);
  CHECK(u.vertex_count == 3);
  CHECK(u.edges.size() == 2);
}

namespace {

SimpleGraph random_graph(std::mt19937& rng, int v, double p) {
  SimpleGraph g{v, {}};
  std::bernoulli_distribution coin(p);
  for (int a = 0; a < v; ++a)
    for (int b = a + 1; b < v; ++b)
      if (coin(rng)) g.edges.emplace_back(a, b);
  return g;
}

SimpleGraph without_edge(const SimpleGraph& g, std::size_t i) {
  SimpleGraph h = g;
  h.edges.erase(h.edges.begin() + static_cast<std::ptrdiff_t>(i));
  return h;
}

SimpleGraph contract(const SimpleGraph& g, std::size_t i) {
  auto [a, b] = g.edges[i];
  std::set<std::pair<int, int>> es;
  auto relabel = [&](int v) {
    if (v == b) v = a;
    return v > b ? v - 1 : v;
  };
  for (std::size_t j = 0; j < g.edges.size(); ++j) {
    if (j == i) continue;
    int x = relabel(g.edges[j].first), y = relabel(g.edges[j].second);
    if (x != y) es.emplace(std::min(x, y), std::max(x, y));
  }
  return SimpleGraph{g.vertex_count - 1, {es.begin(), es.end()}};
}

}  // namespace

TEST_CASE("chromatic polynomial counts proper colorings") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    SimpleGraph g = random_graph(rng, 1 + trial % 8, 0.5);
    ChromaticPoly p = chromatic_polynomial(g);
    CHECK(p.degree() == g.vertex_count);
    CHECK(p.coefficient(g.vertex_count) == 1);
    for (int lambda = 0; lambda <= 4; ++lambda) CHECK(p.evaluate(lambda) == oracle::proper_colorings(g, lambda));
  }
}

TEST_CASE("acyclic orientations equal |chi(-1)|") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    SimpleGraph g = random_graph(rng, 2 + trial % 7, 0.6);
    if (g.edges.size() > 16) continue;
    CHECK(acyclic_count_via_chromatic(g) == oracle::acyclic_orientations(g));
  }
}

TEST_CASE("deletion-contraction identity") {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 15; ++trial) {
    SimpleGraph g = random_graph(rng, 3 + trial % 5, 0.5);
    ChromaticPoly p = chromatic_polynomial(g);
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
      ChromaticPoly d = chromatic_polynomial(without_edge(g, i));
      ChromaticPoly c = chromatic_polynomial(contract(g, i));
      CHECK(p == d - c);
      for (int lambda : {2, 3, 4}) CHECK(p.evaluate(lambda) == d.evaluate(lambda) - c.evaluate(lambda));
    }
  }
}

TEST_CASE("clique sum on stair graphs") {
  for (int n : {3, 5, 7}) {
    const int m = (n - 1) / 2;
    for (int M = m + 2; M <= 9; ++M) {
      SimpleGraph g = stair_graph(M, n);
      // The last vertex and its m predecessors form a clique meeting the rest in m vertices.
      std::vector<int> head, tail;
      for (int v = 0; v < M - 1; ++v) head.push_back(v);
      for (int v = M - 1 - m; v < M; ++v) tail.push_back(v);
      ChromaticPoly x = chromatic_polynomial(induced_subgraph(g, head));
      ChromaticPoly y = chromatic_polynomial(induced_subgraph(g, tail));
      ChromaticPoly glued = clique_sum(x, y, m);
      CHECK(glued == chromatic_polynomial(g));
      for (int lambda = 0; lambda <= 5; ++lambda) CHECK(glued.evaluate(lambda) == oracle::proper_colorings(g, lambda));
    }
  }
}
