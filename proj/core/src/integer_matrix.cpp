#include "mertens/integer_matrix.hpp"

#include <cstdlib>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

#include "mertens/int_math.hpp"

namespace mertens {

IntegerMatrix::IntegerMatrix(std::size_t size, std::vector<std::int64_t> row_major)
    : size_(size), entries_(std::move(row_major)) {
  if (entries_.size() != size * size) {
    throw std::invalid_argument("matrix of size " + std::to_string(size) + " needs " +
                                std::to_string(size * size) + " entries, got " +
                                std::to_string(entries_.size()));
  }
}

IntegerMatrix IntegerMatrix::identity(std::size_t size) {
  IntegerMatrix m(size);
  for (std::size_t i = 0; i < size; ++i) m(i, i) = 1;
  return m;
}

bool IntegerMatrix::is_symmetric() const noexcept {
  for (std::size_t i = 0; i < size_; ++i) {
    for (std::size_t j = i + 1; j < size_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

std::int64_t IntegerMatrix::max_abs_entry() const noexcept {
  std::int64_t best = 0;
  for (const std::int64_t v : entries_) {
    if (v == std::numeric_limits<std::int64_t>::min()) return std::numeric_limits<std::int64_t>::max();
    const std::int64_t a = v < 0 ? -v : v;
    if (a > best) best = a;
  }
  return best;
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.size_ != b.size_) {
    throw std::invalid_argument("matrix product size mismatch: " + std::to_string(a.size_) +
                                " vs " + std::to_string(b.size_));
  }
  const std::size_t s = a.size_;
  IntegerMatrix c(s);
  if (s == 0) return c;

  // When s * max|a| * max|b| fits in int64 no partial sum can overflow and
  // the per-operation checks are skipped.
  std::int64_t bound = 0;
  const bool unchecked = !__builtin_mul_overflow(a.max_abs_entry(), b.max_abs_entry(), &bound) &&
                         !__builtin_mul_overflow(bound, static_cast<std::int64_t>(s), &bound);

  // i-k-j order; zero entries of a are skipped, which halves the work for the
  // triangular and anti-triangular factors used here.
  for (std::size_t i = 0; i < s; ++i) {
    std::int64_t* out = c.entries_.data() + i * s;
    for (std::size_t k = 0; k < s; ++k) {
      const std::int64_t aik = a(i, k);
      if (aik == 0) continue;
      const std::int64_t* brow = b.entries_.data() + k * s;
      if (unchecked) {
        for (std::size_t j = 0; j < s; ++j) out[j] += aik * brow[j];
      } else {
        for (std::size_t j = 0; j < s; ++j) {
          if (brow[j] == 0) continue;
          out[j] = checked_add(out[j], checked_mul(aik, brow[j]));
        }
      }
    }
  }
  return c;
}

std::optional<EntryMismatch> first_mismatch(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.size() != b.size()) {
    return EntryMismatch{0, 0, static_cast<std::int64_t>(a.size()),
                         static_cast<std::int64_t>(b.size())};
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (a(i, j) != b(i, j)) return EntryMismatch{i, j, a(i, j), b(i, j)};
    }
  }
  return std::nullopt;
}

void write_csv(std::ostream& out, const IntegerMatrix& m) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (j != 0) out << ',';
      out << m(i, j);
    }
    out << '\n';
  }
}

}  // namespace mertens
