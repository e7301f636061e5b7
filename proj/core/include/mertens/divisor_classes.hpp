#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace mertens {

/// The classes of the congruence i ~ j <=> floor(n/i) == floor(n/j) on the
/// positive integers, for one fixed n.
///
/// Every class is an integer interval and is labelled by its largest member.
/// The bounded classes are labelled by the sorted set `reps()`; everything
/// above n falls in a single unbounded class, reported as `std::nullopt` by
/// `class_of`. Matrices built on top of this type index their rows and
/// columns by position in `reps()`.
///
/// Immutable after construction.
class ClassStructure {
 public:
  /// Builds the representative set in O(sqrt(n)). Throws std::invalid_argument
  /// for n < 1.
  explicit ClassStructure(std::int64_t n);

  std::int64_t n() const noexcept { return n_; }
  std::span<const std::int64_t> reps() const noexcept { return reps_; }
  std::size_t size() const noexcept { return reps_.size(); }
  std::int64_t rep(std::size_t pos) const { return reps_.at(pos); }

  bool contains(std::int64_t k) const noexcept;

  /// Position of the representative k in `reps()`. Throws std::invalid_argument
  /// when k is not a representative.
  std::size_t index_of(std::int64_t k) const;

  /// The order-reversing involution k -> floor(n/k) on the representatives.
  std::int64_t bar(std::int64_t k) const;

  /// Label of the class of i: its largest member when i <= n, nullopt for the
  /// unbounded class. Throws for i < 1.
  std::optional<std::int64_t> class_of(std::int64_t i) const;

  /// Predecessor of k in `reps()`, with 0 before 1.
  std::int64_t predecessor(std::int64_t k) const;

  /// Number of integers in the class labelled k, i.e. k - predecessor(k).
  std::int64_t class_size(std::int64_t k) const;

  friend bool operator==(const ClassStructure& a, const ClassStructure& b) noexcept {
    return a.n_ == b.n_;
  }

 private:
  std::size_t position_unchecked(std::int64_t k) const noexcept;

  std::int64_t n_;
  std::int64_t root_;
  std::vector<std::int64_t> reps_;
};

/// #reps for n from the closed form isqrt(n) + floor((isqrt(4n+1) - 1) / 2).
std::int64_t class_count_closed_form(std::int64_t n);

/// #reps from the two-case description: 2r - 1 when n < r^2 + r, else 2r,
/// with r = isqrt(n).
std::int64_t class_count_two_case(std::int64_t n);

/// floor(floor(n/i)/j) == floor(n/(i*j)). Always true; kept as a checkable
/// statement for tests.
bool floor_div_nested_check(std::int64_t n, std::int64_t i, std::int64_t j);

}  // namespace mertens
