#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mertens {

/// Raised whenever an exact integer computation would leave the int64 range.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// Exact floor(sqrt(n)) for n >= 0, by integer Newton iteration.
///
/// The iterate x_{k+1} = (x_k + n / x_k) / 2 decreases monotonically towards
/// floor(sqrt(n)) once started above it; the loop stops at the first
/// non-decreasing step. No floating point is involved, so the result is exact
/// at perfect squares and at k^2 + k boundaries.
constexpr std::int64_t isqrt(std::int64_t n) {
  if (n < 0) throw std::domain_error("isqrt of a negative number");
  if (n < 2) return n;
  // Start from a power of two above sqrt(n).
  int bits = 0;
  for (std::uint64_t v = static_cast<std::uint64_t>(n); v != 0; v >>= 1) ++bits;
  std::int64_t x = std::int64_t{1} << ((bits + 1) / 2);
  for (;;) {
    const std::int64_t y = (x + n / x) / 2;
    if (y >= x) break;
    x = y;
  }
  // Correction step, written with divisions so that nothing overflows near
  // INT64_MAX. The loop above already lands on the floor.
  while (x > n / x) --x;
  while (x + 1 <= n / (x + 1)) ++x;
  return x;
}

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw OverflowError("int64 overflow in " + std::to_string(a) + " + " + std::to_string(b));
  }
  return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) {
    throw OverflowError("int64 overflow in " + std::to_string(a) + " - " + std::to_string(b));
  }
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw OverflowError("int64 overflow in " + std::to_string(a) + " * " + std::to_string(b));
  }
  return r;
}

/// floor(n / (i * j)) for positive operands. When i * j overflows it is
/// certainly larger than n, so the quotient is 0.
constexpr std::int64_t floor_div_product(std::int64_t n, std::int64_t i, std::int64_t j) {
  std::int64_t p;
  if (__builtin_mul_overflow(i, j, &p)) return 0;
  return n / p;
}

}  // namespace mertens
