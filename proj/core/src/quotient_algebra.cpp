#include "mertens/quotient_algebra.hpp"

#include <stdexcept>
#include <string>

#include "mertens/int_math.hpp"

namespace mertens {

QuotientAlgebra::QuotientAlgebra(ClassStructure classes) : classes_(std::move(classes)) {
  const std::size_t s = classes_.size();
  const auto reps = classes_.reps();
  const std::int64_t n = classes_.n();
  table_.assign(s * s, kZero);
  for (std::size_t a = 0; a < s; ++a) {
    for (std::size_t b = 0; b < s; ++b) {
      const std::int64_t q = floor_div_product(n, reps[a], reps[b]);
      if (q == 0) break;  // row is monotone: once past n it stays past n
      // The class of i*j is labelled floor(n / floor(n/(i*j))); its position
      // is the mirror of the position of floor(n/(i*j)).
      table_[a * s + b] = static_cast<std::int32_t>(s - 1 - classes_.index_of(q));
    }
  }
}

void QuotientAlgebra::require_same_n(const QuotientVector& x) const {
  if (x.n != classes_.n() || x.coeffs.size() != dimension()) {
    throw std::invalid_argument("quotient vector for n = " + std::to_string(x.n) +
                                " used in the algebra for n = " + std::to_string(classes_.n()));
  }
}

std::optional<std::int64_t> QuotientAlgebra::product(std::int64_t i, std::int64_t j) const {
  const std::int32_t p = product_index(classes_.index_of(i), classes_.index_of(j));
  if (p == kZero) return std::nullopt;
  return classes_.rep(static_cast<std::size_t>(p));
}

QuotientVector QuotientAlgebra::zero() const {
  return QuotientVector{classes_.n(), std::vector<std::int64_t>(dimension(), 0)};
}

QuotientVector QuotientAlgebra::unit() const { return basis(1); }

QuotientVector QuotientAlgebra::basis(std::int64_t k) const {
  QuotientVector v = zero();
  v.coeffs[classes_.index_of(k)] = 1;
  return v;
}

QuotientVector QuotientAlgebra::project(std::span<const std::int64_t> a) const {
  if (static_cast<std::int64_t>(a.size()) < classes_.n()) {
    throw std::invalid_argument("projection needs at least n = " + std::to_string(classes_.n()) +
                                " terms, got " + std::to_string(a.size()));
  }
  QuotientVector v = zero();
  std::size_t next = 0;  // index of a(k- + 1)
  for (std::size_t pos = 0; pos < dimension(); ++pos) {
    const auto last = static_cast<std::size_t>(classes_.rep(pos));
    std::int64_t sum = 0;
    for (; next < last; ++next) sum = checked_add(sum, a[next]);
    v.coeffs[pos] = sum;
  }
  return v;
}

QuotientVector QuotientAlgebra::project_from_prefix(
    const std::function<std::int64_t(std::int64_t)>& prefix) const {
  QuotientVector v = zero();
  std::int64_t previous = 0;
  for (std::size_t pos = 0; pos < dimension(); ++pos) {
    const std::int64_t current = prefix(classes_.rep(pos));
    v.coeffs[pos] = checked_sub(current, previous);
    previous = current;
  }
  return v;
}

QuotientVector QuotientAlgebra::project_ones() const {
  return project_from_prefix([](std::int64_t k) { return k; });
}

QuotientVector QuotientAlgebra::convolve(const QuotientVector& x, const QuotientVector& y) const {
  require_same_n(x);
  require_same_n(y);
  QuotientVector out = zero();
  const std::size_t s = dimension();
  for (std::size_t a = 0; a < s; ++a) {
    if (x.coeffs[a] == 0) continue;
    for (std::size_t b = 0; b < s; ++b) {
      const std::int32_t p = product_index(a, b);
      if (p == kZero) break;
      if (y.coeffs[b] == 0) continue;
      auto& slot = out.coeffs[static_cast<std::size_t>(p)];
      slot = checked_add(slot, checked_mul(x.coeffs[a], y.coeffs[b]));
    }
  }
  return out;
}

IntegerMatrix QuotientAlgebra::regular_representation(const QuotientVector& x) const {
  require_same_n(x);
  const std::size_t s = dimension();
  IntegerMatrix rho(s);
  for (std::size_t col = 0; col < s; ++col) {
    for (std::size_t a = 0; a < s; ++a) {
      const std::int32_t p = product_index(a, col);
      if (p == kZero) break;
      if (x.coeffs[a] == 0) continue;
      auto& slot = rho(static_cast<std::size_t>(p), col);
      slot = checked_add(slot, x.coeffs[a]);
    }
  }
  return rho;
}

}  // namespace mertens
