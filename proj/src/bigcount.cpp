#include "ribbonry/bigcount.hpp"

#include <cmath>

#include "ribbonry/errors.hpp"

namespace ribbonry {

BigCount factorial(unsigned m) {
  BigCount r = 1;
  for (unsigned i = 2; i <= m; ++i) r *= i;
  return r;
}

BigCount binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigCount r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

double log2_big(const BigCount& value) {
  if (value <= 0) throw InvalidArgument("log2 of a non-positive integer");
  const unsigned top = boost::multiprecision::msb(value);
  if (top < 60) return std::log2(value.convert_to<double>());
  // Keep the leading 60 bits; the rest cannot move a double.
  const unsigned shift = top - 59;
  const BigCount head = value >> shift;
  return std::log2(head.convert_to<double>()) + shift;
}

}  // namespace ribbonry
