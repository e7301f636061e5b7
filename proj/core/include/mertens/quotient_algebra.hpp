#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "mertens/divisor_classes.hpp"
#include "mertens/integer_matrix.hpp"

namespace mertens {

/// An element of the quotient algebra: integer coordinates on the basis of
/// class representatives, ordered as `ClassStructure::reps()`.
struct QuotientVector {
  std::int64_t n = 0;
  std::vector<std::int64_t> coeffs;

  friend bool operator==(const QuotientVector&, const QuotientVector&) = default;
};

/// The algebra spanned by the bounded classes for a fixed n, with the
/// unbounded class identified with zero.
///
/// The product of two basis classes i, j is the class of i*j when i*j <= n and
/// zero otherwise. The product table is tabulated once, by position, at
/// construction. Thread-safe for concurrent reads.
class QuotientAlgebra {
 public:
  /// Position-table entry meaning "the product is zero".
  static constexpr std::int32_t kZero = -1;

  explicit QuotientAlgebra(ClassStructure classes);
  explicit QuotientAlgebra(std::int64_t n) : QuotientAlgebra(ClassStructure(n)) {}

  const ClassStructure& classes() const noexcept { return classes_; }
  std::size_t dimension() const noexcept { return classes_.size(); }

  /// Product of the basis classes labelled i and j: the label of the
  /// product class, or nullopt for zero. Throws when i or j is not a label.
  std::optional<std::int64_t> product(std::int64_t i, std::int64_t j) const;

  /// Same product by position in reps(); kZero for zero.
  std::int32_t product_index(std::size_t a, std::size_t b) const noexcept {
    return table_[a * dimension() + b];
  }

  QuotientVector zero() const;
  QuotientVector unit() const;
  /// Basis vector of the class labelled k.
  QuotientVector basis(std::int64_t k) const;

  /// Image of a sequence a(1), a(2), ... (given as a[0], a[1], ...) under
  /// the projection: coordinate k is the sum of a over the class of k.
  /// Throws std::invalid_argument when fewer than n terms are supplied.
  QuotientVector project(std::span<const std::int64_t> a) const;

  /// Projection of the sequence whose partial sums are `prefix` (prefix(0)
  /// must be 0): coordinate k is prefix(k) - prefix(k-). Only the values at
  /// representatives are requested.
  QuotientVector project_from_prefix(const std::function<std::int64_t(std::int64_t)>& prefix) const;

  /// Image of the all-ones sequence: coordinates k - k-.
  QuotientVector project_ones() const;

  /// Product in the algebra. Throws std::invalid_argument when the operands
  /// belong to a different n and OverflowError on int64 overflow.
  QuotientVector convolve(const QuotientVector& x, const QuotientVector& y) const;

  /// Matrix of y -> x * y on the basis; column j holds x * (basis j), so the
  /// first column is x itself. Throws like `convolve`.
  IntegerMatrix regular_representation(const QuotientVector& x) const;

 private:
  void require_same_n(const QuotientVector& x) const;

  ClassStructure classes_;
  std::vector<std::int32_t> table_;
};

}  // namespace mertens
