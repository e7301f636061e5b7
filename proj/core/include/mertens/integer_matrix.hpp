#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

namespace mertens {

/// Dense square matrix of int64 entries, row-major. Arithmetic is exact:
/// products throw OverflowError instead of wrapping.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  explicit IntegerMatrix(std::size_t size) : size_(size), entries_(size * size, 0) {}
  IntegerMatrix(std::size_t size, std::vector<std::int64_t> row_major);

  static IntegerMatrix identity(std::size_t size);

  std::size_t size() const noexcept { return size_; }

  std::int64_t& operator()(std::size_t row, std::size_t col) noexcept {
    return entries_[row * size_ + col];
  }
  std::int64_t operator()(std::size_t row, std::size_t col) const noexcept {
    return entries_[row * size_ + col];
  }

  std::span<const std::int64_t> row(std::size_t r) const noexcept {
    return {entries_.data() + r * size_, size_};
  }
  std::span<const std::int64_t> entries() const noexcept { return entries_; }

  bool is_symmetric() const noexcept;
  std::int64_t max_abs_entry() const noexcept;

  /// Exact product; throws std::invalid_argument on a size mismatch and
  /// OverflowError when an intermediate leaves the int64 range.
  friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::int64_t> entries_;
};

struct EntryMismatch {
  std::size_t row;
  std::size_t col;
  std::int64_t lhs;
  std::int64_t rhs;
};

/// First (row-major) entry where a and b differ; nullopt when equal.
/// Matrices of different size report the (0, 0) position with the sizes.
std::optional<EntryMismatch> first_mismatch(const IntegerMatrix& a, const IntegerMatrix& b);

/// One line per row, entries separated by commas, no header.
void write_csv(std::ostream& out, const IntegerMatrix& m);

}  // namespace mertens
