#pragma once

#include <vector>

#include "ribbonry/bigcount.hpp"

namespace ribbonry::formulas {

inline constexpr double kCatalan = 0.915965594177219015054603514932;
// C_bessel in the asymptotics of the n x 2n rectangle counts.
inline constexpr double kBesselC = 2.496918339;
/// 2G / (pi ln 2): per-tile entropy of domino tilings of large rectangles.
double domino_rect_entropy();

/// Tilings of an n x N rectangle by n-ribbons: N! for N <= n, (n+1)!/2 for N = n + 1.
BigCount rect_strip_count(int n, int width);

/// Tilings of AD(N, n, k) by n-ribbons, 2^(N(N+1)/2) for every n and k.
BigCount aztec_count(int size);

/// Tilings of the stair St_M^(n) by n-ribbons. Even n falls back to counting the
/// n/2 x M rectangle by n/2-ribbons.
BigCount stair_count(int rows, int n);

/// log2(n + 1) - 1; only odd n.
double stair_entropy_limit(int n);

/// Sequence A115047 (n x 2n rectangles by n-ribbons) from its quadratic recurrence.
BigCount a_sequence(int n);
/// a_0 .. a_n_max.
std::vector<BigCount> a_sequence_table(int n_max);

struct AEntropyRow {
  int n = 0;
  double entropy = 0;    // log2(a_n) / (2n)
  double asymptote = 0;  // log2 n - log2 e + 1 - log2(C) / 2
};
std::vector<AEntropyRow> a_entropy_diagnostic(int n_max);
double a_entropy_asymptote(int n);

enum class BoundKind { general_upper, rect_lower, rect_upper };

struct EntropyBound {
  BoundKind kind;
  int n;
  double value;
};

struct EntropyBounds {
  EntropyBound general_upper;
  EntropyBound rect_lower;
  EntropyBound rect_upper;
};

EntropyBounds entropy_bounds(int n);

/// Limit per-tile entropy of domino tilings of N x M rectangles as M grows.
double domino_strip_entropy(int height);

/// F_1 = F_2 = 1.
BigCount fibonacci(int k);

/// Variable-length ribbon tilings of an M x N rectangle (arguments are swapped if M > N).
BigCount stanley_fib_count(int rows, int cols);

struct MinimalTilings {
  int tiles = 0;
  BigCount count;
};
/// Minimal variable-length tilings of an M x N rectangle: M ribbons, (M!)^2 ways.
MinimalTilings stanley_minimal_count(int rows, int cols);

}  // namespace ribbonry::formulas
