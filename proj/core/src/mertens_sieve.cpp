#include "mertens/mertens_sieve.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace mertens {

std::int64_t sieve_cap_from_env() {
  const char* raw = std::getenv(kSieveCapEnv);
  if (raw == nullptr || *raw == '\0') return kDefaultSieveCap;
  char* end = nullptr;
  const long long v = std::strtoll(raw, &end, 10);
  if (*end != '\0' || v < 1) {
    throw std::invalid_argument(std::string(kSieveCapEnv) + " must be a positive integer, got '" +
                                raw + "'");
  }
  return v;
}

MertensTable MertensTable::build(std::int64_t limit, std::int64_t cap) {
  if (limit < 1) throw std::invalid_argument("sieve limit must be >= 1, got " + std::to_string(limit));
  if (limit > cap) {
    // Roughly 9 bytes per entry for mu and M, plus the composite bitmap.
    const double mib = static_cast<double>(limit) * 9.125 / (1024.0 * 1024.0);
    throw std::invalid_argument("sieve limit " + std::to_string(limit) + " exceeds the cap of " +
                                std::to_string(cap) + " entries (would need about " +
                                std::to_string(static_cast<long long>(mib)) +
                                " MiB); raise it with --sieve-cap or " + kSieveCapEnv);
  }

  MertensTable t;
  t.limit_ = limit;
  const auto size = static_cast<std::size_t>(limit) + 1;
  t.mobius_.assign(size, 0);
  t.mertens_.assign(size, 0);

  std::vector<bool> composite(size, false);
  std::vector<std::int32_t> primes;
  t.mobius_[1] = 1;
  for (std::size_t i = 2; i < size; ++i) {
    if (!composite[i]) {
      primes.push_back(static_cast<std::int32_t>(i));
      t.mobius_[i] = -1;
    }
    for (const std::int32_t p : primes) {
      const std::size_t m = i * static_cast<std::size_t>(p);
      if (m >= size) break;
      composite[m] = true;
      if (i % static_cast<std::size_t>(p) == 0) {
        t.mobius_[m] = 0;
        break;
      }
      t.mobius_[m] = static_cast<std::int8_t>(-t.mobius_[i]);
    }
  }

  for (std::size_t k = 1; k < size; ++k) t.mertens_[k] = t.mertens_[k - 1] + t.mobius_[k];
  return t;
}

int MertensTable::mobius(std::int64_t k) const {
  if (k < 1 || k > limit_) {
    throw std::out_of_range("mobius argument " + std::to_string(k) + " outside 1.." +
                            std::to_string(limit_));
  }
  return mobius_[static_cast<std::size_t>(k)];
}

std::int64_t MertensTable::mertens(std::int64_t k) const {
  if (k < 0 || k > limit_) {
    throw std::out_of_range("mertens argument " + std::to_string(k) + " outside 0.." +
                            std::to_string(limit_));
  }
  return mertens_[static_cast<std::size_t>(k)];
}

}  // namespace mertens
