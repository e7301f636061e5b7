#include <doctest.h>

#include <stdexcept>

#include <cstdint>
#include <limits>

#include "mertens/int_math.hpp"

using mertens::isqrt;

TEST_CASE("isqrt matches a linear scan for small n") {
  std::int64_t r = 0;
  for (std::int64_t n = 0; n <= 200'000; ++n) {
    while ((r + 1) * (r + 1) <= n) ++r;
    REQUIRE(isqrt(n) == r);
  }
}

TEST_CASE("isqrt is exact around squares and k^2 + k") {
  for (std::int64_t k : {1LL, 2LL, 1000LL, 46340LL, 3037000499LL}) {
    CHECK(isqrt(k * k) == k);
    CHECK(isqrt(k * k - 1) == k - 1);
    CHECK(isqrt(k * k + k) == k);
    if (k < 3037000499LL) CHECK(isqrt(k * k + 2 * k) == k);
  }
  CHECK(isqrt(std::numeric_limits<std::int64_t>::max()) == 3037000499LL);
  CHECK_THROWS_AS(isqrt(-1), std::domain_error);
}

TEST_CASE("checked arithmetic throws instead of wrapping") {
  constexpr auto big = std::numeric_limits<std::int64_t>::max();
  CHECK(mertens::checked_mul(3'000'000'000LL, 3) == 9'000'000'000LL);
  CHECK_THROWS_AS(mertens::checked_mul(big / 2 + 1, 2), mertens::OverflowError);
  CHECK_THROWS_AS(mertens::checked_add(big, 1), mertens::OverflowError);
  CHECK_THROWS_AS(mertens::checked_sub(-big - 1, 1), mertens::OverflowError);
}

TEST_CASE("floor_div_product treats an overflowing product as exceeding n") {
  CHECK(mertens::floor_div_product(16, 2, 3) == 2);
  CHECK(mertens::floor_div_product(1'000'000, 997, 991) == 1);
  CHECK(mertens::floor_div_product(std::numeric_limits<std::int64_t>::max(), 1LL << 40, 1LL << 40) ==
        0);
}
