#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ribbonry/bigcount.hpp"
#include "ribbonry/sheffield.hpp"

namespace ribbonry {

/// Undirected simple graph on vertices 0..vertex_count-1.
struct SimpleGraph {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;
};

/// Sheffield graph with directions and edge classes forgotten.
SimpleGraph underlying_graph(const SGraph& graph);

SimpleGraph complete_graph(int m);
SimpleGraph path_graph(int m);
SimpleGraph edgeless_graph(int m);
SimpleGraph induced_subgraph(const SimpleGraph& graph, const std::vector<int>& vertices);

/// Graph of the odd-n stair with M rows: vertex k stands for the tile at level 2k and is
/// joined to k + i for i = 1..(n-1)/2.
SimpleGraph stair_graph(int rows, int n);

/// Integer polynomial in lambda; coefficient i multiplies lambda^i.
class ChromaticPoly {
 public:
  ChromaticPoly() : coeffs_{0} {}
  explicit ChromaticPoly(std::vector<BigCount> coeffs);

  static ChromaticPoly constant(const BigCount& c) { return ChromaticPoly({c}); }
  /// lambda - a
  static ChromaticPoly linear(const BigCount& a) { return ChromaticPoly({-a, 1}); }
  /// lambda (lambda - 1) ... (lambda - m + 1)
  static ChromaticPoly falling_factorial(int m);
  static ChromaticPoly power(int m);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const BigCount& coefficient(int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }
  const std::vector<BigCount>& coefficients() const noexcept { return coeffs_; }

  BigCount evaluate(const BigCount& lambda) const;

  ChromaticPoly operator+(const ChromaticPoly& o) const;
  ChromaticPoly operator-(const ChromaticPoly& o) const;
  ChromaticPoly operator*(const ChromaticPoly& o) const;

  /// Quotient by a monic divisor; throws InvalidArgument if the remainder is not zero.
  ChromaticPoly divide_exact(const ChromaticPoly& divisor) const;

  /// Human-readable form, highest power first.
  std::string to_string() const;

  friend bool operator==(const ChromaticPoly&, const ChromaticPoly&) = default;

 private:
  void trim();
  std::vector<BigCount> coeffs_;
};

/// Chromatic polynomial by deletion-contraction (at most 64 vertices).
ChromaticPoly chromatic_polynomial(const SimpleGraph& graph);

/// lambda (lambda-1) ... (lambda-m+1) (lambda-m)^(M-m) with m = (n-1)/2, or the falling
/// factorial of M when the stair graph is complete.
ChromaticPoly stair_chromatic_closed_form(int rows, int n);

/// |chi(-1)|, the number of acyclic orientations.
BigCount acyclic_count_via_chromatic(const SimpleGraph& graph);

/// chi_X * chi_Y / lambda^(s): the chromatic polynomial of X and Y glued along a shared
/// s-clique.
ChromaticPoly clique_sum(const ChromaticPoly& x, const ChromaticPoly& y, int s);

}  // namespace ribbonry
