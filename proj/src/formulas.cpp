#include "ribbonry/formulas.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "ribbonry/enumerate.hpp"
#include "ribbonry/errors.hpp"
#include "ribbonry/region.hpp"

namespace ribbonry::formulas {

double domino_rect_entropy() { return 2.0 * kCatalan / (std::numbers::pi * std::numbers::ln2); }

BigCount rect_strip_count(int n, int width) {
  if (n < 1 || width < 1) throw InvalidArgument("rect_strip_count needs positive n and width");
  if (width <= n) return factorial(static_cast<unsigned>(width));
  if (width == n + 1) return factorial(static_cast<unsigned>(n + 1)) / 2;
  throw InvalidArgument("no closed form for width > n + 1");
}

BigCount aztec_count(int size) {
  if (size < 1) throw InvalidArgument("aztec size must be >= 1");
  return pow2(static_cast<std::uint64_t>(size) * (size + 1) / 2);
}

BigCount stair_count(int rows, int n) {
  if (rows < 1 || n < 1) throw InvalidArgument("stair_count needs positive arguments");
  if (n % 2 == 0) return count_tilings(build_rectangle(n / 2, rows), n / 2);
  const int half = (n + 1) / 2;
  if (rows <= half) return factorial(static_cast<unsigned>(rows));
  // Gamma((n+1)/2) at a positive integer argument.
  BigCount r = factorial(static_cast<unsigned>(half - 1));
  r *= boost::multiprecision::pow(BigCount(half), static_cast<unsigned>(rows - (n - 1) / 2));
  return r;
}

double stair_entropy_limit(int n) {
  if (n < 1 || n % 2 == 0) throw InvalidArgument("stair entropy limit is only known for odd n");
  return std::log2(static_cast<double>(n) + 1.0) - 1.0;
}

std::vector<BigCount> a_sequence_table(int n_max) {
  if (n_max < 0) throw InvalidArgument("a_sequence index must be >= 0");
  std::vector<BigCount> a(static_cast<std::size_t>(n_max) + 1);
  a[0] = 1;
  for (int n = 1; n <= n_max; ++n) {
    // a_n = sum_i i(n-i+1) C(n-1,i-1) C(n+3,i+1) a_{i-1} a_{n-i} / (2(n+2)).
    BigCount sum = 0;
    for (int i = 1; i <= n; ++i) {
      BigCount term = BigCount(i) * (n - i + 1);
      term *= binomial(static_cast<unsigned>(n - 1), static_cast<unsigned>(i - 1));
      term *= binomial(static_cast<unsigned>(n + 3), static_cast<unsigned>(i + 1));
      term *= a[i - 1];
      term *= a[n - i];
      sum += term;
    }
    const BigCount denominator = 2 * (n + 2);
    if (sum % denominator != 0) {
      throw InternalInconsistency("a_" + std::to_string(n) + " is not an integer");
    }
    a[n] = sum / denominator;
  }
  return a;
}

BigCount a_sequence(int n) { return a_sequence_table(n).back(); }

double a_entropy_asymptote(int n) {
  return std::log2(static_cast<double>(n)) - std::numbers::log2e + 1.0 - 0.5 * std::log2(kBesselC);
}

std::vector<AEntropyRow> a_entropy_diagnostic(int n_max) {
  const auto a = a_sequence_table(n_max);
  std::vector<AEntropyRow> rows;
  for (int n = 1; n <= n_max; ++n) {
    rows.push_back({n, log2_big(a[n]) / (2.0 * n), a_entropy_asymptote(n)});
  }
  return rows;
}

EntropyBounds entropy_bounds(int n) {
  if (n < 2) throw InvalidArgument("entropy bounds need n >= 2");
  const double ln = std::log2(static_cast<double>(n));
  const double lower =
      ln - std::numbers::log2e + (0.5 * ln + std::log2(std::sqrt(2.0 * std::numbers::pi))) / n;
  return {{BoundKind::general_upper, n, static_cast<double>(n - 1)},
          {BoundKind::rect_lower, n, lower},
          {BoundKind::rect_upper, n, ln + std::numbers::log2e}};
}

double domino_strip_entropy(int height) {
  if (height < 1) throw InvalidArgument("strip height must be >= 1");
  double sum = 0;
  for (int l = 1; l <= height / 2; ++l) {
    const double c = std::cos(l * std::numbers::pi / (height + 1));
    sum += std::log2(c + std::sqrt(1.0 + c * c));
  }
  return 2.0 * sum / height;
}

BigCount fibonacci(int k) {
  if (k < 0) throw InvalidArgument("fibonacci index must be >= 0");
  BigCount prev = 0;
  BigCount cur = 1;
  if (k == 0) return 0;
  for (int i = 1; i < k; ++i) {
    BigCount next = prev + cur;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

BigCount stanley_fib_count(int rows, int cols) {
  if (rows < 1 || cols < 1) throw InvalidArgument("rectangle dimensions must be positive");
  if (rows > cols) std::swap(rows, cols);
  BigCount r = 1;
  for (int k = 1; k <= rows - 1; ++k) {
    const BigCount f = fibonacci(2 * k + 2);
    r *= f * f;
  }
  r *= boost::multiprecision::pow(fibonacci(2 * rows + 1), static_cast<unsigned>(cols - rows));
  return r;
}

MinimalTilings stanley_minimal_count(int rows, int cols) {
  if (rows < 1 || cols < 1) throw InvalidArgument("rectangle dimensions must be positive");
  if (rows > cols) std::swap(rows, cols);
  const BigCount f = factorial(static_cast<unsigned>(rows));
  return {rows, f * f};
}

}  // namespace ribbonry::formulas
