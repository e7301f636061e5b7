#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace mertens {

/// Default largest sieve limit accepted by `MertensTable::build`.
inline constexpr std::int64_t kDefaultSieveCap = 100'000'000;

/// Environment variable consulted by `sieve_cap_from_env`.
inline constexpr const char* kSieveCapEnv = "MERTENS_SIEVE_CAP";

/// Returns the cap from MERTENS_SIEVE_CAP when set and valid, otherwise
/// kDefaultSieveCap. Throws std::invalid_argument on a malformed value.
std::int64_t sieve_cap_from_env();

/// Moebius values mu(1..L) and Mertens prefix sums M(0..L), M(0) = 0.
/// Immutable once built; share it read-only across workers.
class MertensTable {
 public:
  /// Linear sieve up to `limit`. Throws std::invalid_argument when
  /// limit < 1 or limit > cap.
  static MertensTable build(std::int64_t limit, std::int64_t cap = kDefaultSieveCap);

  std::int64_t limit() const noexcept { return limit_; }

  /// mu(k) for 1 <= k <= limit.
  int mobius(std::int64_t k) const;
  /// M(k) for 0 <= k <= limit.
  std::int64_t mertens(std::int64_t k) const;

  /// Unchecked M(k); caller guarantees 0 <= k <= limit.
  std::int64_t mertens_unchecked(std::int64_t k) const noexcept {
    return mertens_[static_cast<std::size_t>(k)];
  }

  /// mu indexed from 0 (entry 0 is 0).
  std::span<const std::int8_t> mobius_values() const noexcept { return mobius_; }
  std::span<const std::int64_t> mertens_values() const noexcept { return mertens_; }

 private:
  MertensTable() = default;

  std::int64_t limit_ = 0;
  std::vector<std::int8_t> mobius_;
  std::vector<std::int64_t> mertens_;
};

}  // namespace mertens
