#include "mertens/divisor_classes.hpp"

#include <stdexcept>
#include <string>

#include "mertens/int_math.hpp"

namespace mertens {

namespace {

[[noreturn]] void not_a_rep(std::int64_t k, std::int64_t n) {
  throw std::invalid_argument(std::to_string(k) + " is not a class representative for n = " +
                              std::to_string(n));
}

}  // namespace

ClassStructure::ClassStructure(std::int64_t n) : n_(n), root_(0) {
  if (n < 1) throw std::invalid_argument("class structure needs n >= 1, got " + std::to_string(n));
  root_ = isqrt(n);
  const bool shared_middle = n < root_ * root_ + root_;
  reps_.reserve(static_cast<std::size_t>(2 * root_));
  for (std::int64_t k = 1; k <= root_; ++k) reps_.push_back(k);
  // Upper arm: floor(n/k) for k = r..1, dropping floor(n/r) when it equals r.
  for (std::int64_t k = shared_middle ? root_ - 1 : root_; k >= 1; --k) reps_.push_back(n / k);
}

std::size_t ClassStructure::position_unchecked(std::int64_t k) const noexcept {
  if (k <= root_) return static_cast<std::size_t>(k - 1);
  return reps_.size() - static_cast<std::size_t>(n_ / k);
}

bool ClassStructure::contains(std::int64_t k) const noexcept {
  if (k < 1 || k > n_) return false;
  return reps_[position_unchecked(k)] == k;
}

std::size_t ClassStructure::index_of(std::int64_t k) const {
  if (!contains(k)) not_a_rep(k, n_);
  return position_unchecked(k);
}

std::int64_t ClassStructure::bar(std::int64_t k) const {
  if (!contains(k)) not_a_rep(k, n_);
  return n_ / k;
}

std::optional<std::int64_t> ClassStructure::class_of(std::int64_t i) const {
  if (i < 1) throw std::invalid_argument("class_of needs i >= 1, got " + std::to_string(i));
  if (i > n_) return std::nullopt;
  return n_ / (n_ / i);
}

std::int64_t ClassStructure::predecessor(std::int64_t k) const {
  const std::size_t pos = index_of(k);
  return pos == 0 ? 0 : reps_[pos - 1];
}

std::int64_t ClassStructure::class_size(std::int64_t k) const { return k - predecessor(k); }

std::int64_t class_count_closed_form(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("class count needs n >= 1");
  return isqrt(n) + (isqrt(checked_add(checked_mul(4, n), 1)) - 1) / 2;
}

std::int64_t class_count_two_case(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("class count needs n >= 1");
  const std::int64_t r = isqrt(n);
  return n < r * r + r ? 2 * r - 1 : 2 * r;
}

bool floor_div_nested_check(std::int64_t n, std::int64_t i, std::int64_t j) {
  return (n / i) / j == floor_div_product(n, i, j);
}

}  // namespace mertens
