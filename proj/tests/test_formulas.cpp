#include <doctest.h>

#include <cmath>
#include <numbers>

#include "ribbonry/enumerate.hpp"
#include "ribbonry/errors.hpp"
#include "ribbonry/formulas.hpp"

using namespace ribbonry;
using namespace ribbonry::formulas;

TEST_CASE("constants") {
  CHECK(domino_rect_entropy() == doctest::Approx(0.8412669407).epsilon(1e-10));
  CHECK(kCatalan == doctest::Approx(0.915965594).epsilon(1e-9));
}

TEST_CASE("rect_strip_count") {
  CHECK(rect_strip_count(4, 4) == 24);
  CHECK(rect_strip_count(3, 4) == 12);
  CHECK(rect_strip_count(5, 1) == 1);
  CHECK_THROWS_AS(rect_strip_count(3, 5), InvalidArgument);
  CHECK_THROWS_AS(rect_strip_count(0, 1), InvalidArgument);
}

TEST_CASE("aztec_count") {
  CHECK(aztec_count(1) == 2);
  CHECK(aztec_count(2) == 8);
  CHECK(aztec_count(3) == 64);
  CHECK(aztec_count(10) == pow2(55));
  CHECK_THROWS_AS(aztec_count(0), InvalidArgument);
}

TEST_CASE("stair_count") {
  CHECK(stair_count(2, 3) == 2);
  CHECK(stair_count(7, 3) == 64);
  CHECK(stair_count(7, 5) == 486);
  CHECK(stair_count(3, 4) == 3);
  CHECK(stair_count(3, 7) == 6);
  CHECK(stair_count(4, 7) == 24);
  CHECK(stair_count(5, 7) == 6 * 4 * 4);
  CHECK(stair_count(5, 1) == 1);
  CHECK_THROWS_AS(stair_count(0, 3), InvalidArgument);
}

TEST_CASE("stair_entropy_limit") {
  CHECK(stair_entropy_limit(3) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(stair_entropy_limit(1) == 0.0);
  CHECK(stair_entropy_limit(7) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK_THROWS_AS(stair_entropy_limit(4), InvalidArgument);
}

TEST_CASE("a_sequence") {
  CHECK(a_sequence(0) == 1);
  CHECK(a_sequence(1) == 1);
  CHECK(a_sequence(2) == 5);
  CHECK(a_sequence(3) == 61);
  CHECK(a_sequence(4) == 1379);
  CHECK(a_sequence(4) == count_tilings(build_rectangle(4, 8), 4));
  CHECK_THROWS_AS(a_sequence(-1), InvalidArgument);
}

TEST_CASE("a_entropy_diagnostic") {
  auto rows = a_entropy_diagnostic(100);
  REQUIRE(rows.size() == 100);
  CHECK(rows[1].entropy == doctest::Approx(std::log2(5.0) / 4).epsilon(1e-12));
  CHECK(rows[3].entropy == doctest::Approx(std::log2(1379.0) / 8).epsilon(1e-12));
  CHECK(rows[3].entropy == doctest::Approx(1.3034).epsilon(1e-3));
  const double expect = std::log2(100.0) - std::numbers::log2e + 1 - 0.5 * std::log2(2.496918339);
  CHECK(rows[99].asymptote == doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("entropy_bounds") {
  auto b2 = entropy_bounds(2);
  CHECK(b2.general_upper.value == 1.0);
  CHECK(b2.general_upper.kind == BoundKind::general_upper);
  const double lower2 = 1 - std::numbers::log2e + 0.5 * (0.5 + std::log2(std::sqrt(2 * std::numbers::pi)));
  CHECK(b2.rect_lower.value == doctest::Approx(lower2).epsilon(1e-12));
  CHECK(b2.rect_lower.value == doctest::Approx(0.471).epsilon(1e-3));
  CHECK(entropy_bounds(8).rect_upper.value == doctest::Approx(3 + std::numbers::log2e).epsilon(1e-12));
  for (int n = 2; n <= 50; ++n) {
    auto b = entropy_bounds(n);
    CHECK(b.rect_lower.value <= b.rect_upper.value);
    CHECK(b.general_upper.value == n - 1);
  }
  CHECK_THROWS_AS(entropy_bounds(1), InvalidArgument);
}

TEST_CASE("domino_strip_entropy") {
  CHECK(domino_strip_entropy(2) == doctest::Approx(std::log2(std::numbers::phi)).epsilon(1e-12));
  CHECK(domino_strip_entropy(1) == 0.0);
  CHECK(std::abs(domino_strip_entropy(2000) - domino_rect_entropy()) < 1e-3);
  CHECK_THROWS_AS(domino_strip_entropy(0), InvalidArgument);
}

TEST_CASE("fibonacci and stanley counts") {
  CHECK(fibonacci(1) == 1);
  CHECK(fibonacci(2) == 1);
  CHECK(fibonacci(3) == 2);
  CHECK(fibonacci(10) == 55);
  CHECK(stanley_fib_count(1, 2) == 2);
  CHECK(stanley_fib_count(2, 2) == 9);
  CHECK(stanley_fib_count(2, 3) == 45);
  CHECK(stanley_fib_count(3, 2) == 45);
  auto m = stanley_minimal_count(2, 2);
  CHECK(m.tiles == 2);
  CHECK(m.count == 4);
  auto m15 = stanley_minimal_count(1, 5);
  CHECK(m15.tiles == 1);
  CHECK(m15.count == 1);
  auto m34 = stanley_minimal_count(3, 4);
  CHECK(m34.tiles == 3);
  CHECK(m34.count == 36);
  auto e34 = count_minimal(build_rectangle(3, 4));
  CHECK(e34.min_tiles == 3);
  CHECK(e34.count == 36);
}
