#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace ribbonry {

// Exact non-negative counts. Signed so polynomial coefficients can share the type.
using BigCount = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline std::string to_decimal(const BigCount& value) { return value.str(); }

inline BigCount pow2(std::uint64_t exponent) {
  BigCount result = 1;
  result <<= exponent;
  return result;
}

BigCount factorial(unsigned m);
BigCount binomial(unsigned n, unsigned k);

// log2 of a positive integer, accurate to double precision for any size.
double log2_big(const BigCount& value);

}  // namespace ribbonry
