#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <random>
#include <vector>

#include "mertens/divisor_classes.hpp"
#include "mertens/int_math.hpp"
#include "oracles.hpp"

using mertens::ClassStructure;

namespace {

std::vector<std::int64_t> reps_of(const ClassStructure& cs) {
  return {cs.reps().begin(), cs.reps().end()};
}

}  // namespace

TEST_CASE("representatives of the worked examples") {
  CHECK(reps_of(ClassStructure(16)) == std::vector<std::int64_t>{1, 2, 3, 4, 5, 8, 16});
  CHECK(ClassStructure(16).size() == 7);
  CHECK(reps_of(ClassStructure(1)) == std::vector<std::int64_t>{1});
  CHECK(reps_of(ClassStructure(12)) == std::vector<std::int64_t>{1, 2, 3, 4, 6, 12});
  CHECK_THROWS_AS(ClassStructure(0), std::invalid_argument);
  CHECK_THROWS_AS(ClassStructure(-5), std::invalid_argument);
}

TEST_CASE("bar is the order-reversing involution") {
  const ClassStructure cs16(16);
  CHECK(cs16.bar(3) == 5);
  CHECK(cs16.bar(16) == 1);
  const ClassStructure cs12(12);
  CHECK(cs12.bar(4) == 3);
  CHECK(cs12.bar(3) == 4);
  CHECK_THROWS_AS(cs16.bar(6), std::invalid_argument);
  CHECK_THROWS_AS(cs16.bar(17), std::invalid_argument);

  for (std::int64_t n = 1; n <= 10'000; ++n) {
    const ClassStructure cs(n);
    const auto reps = cs.reps();
    for (std::size_t p = 0; p < reps.size(); ++p) {
      const std::int64_t b = cs.bar(reps[p]);
      REQUIRE(b == reps[reps.size() - 1 - p]);
      REQUIRE(cs.bar(b) == reps[p]);
    }
  }
}

TEST_CASE("class_of labels each class by its largest member") {
  const ClassStructure cs(16);
  CHECK(cs.class_of(7) == 8);
  CHECK(cs.class_of(6) == 8);
  CHECK(cs.class_of(16) == 16);
  CHECK(cs.class_of(9) == 16);
  CHECK_FALSE(cs.class_of(17).has_value());
  CHECK_THROWS_AS(cs.class_of(0), std::invalid_argument);

  for (std::int64_t n = 1; n <= 300; ++n) {
    const ClassStructure c(n);
    for (std::int64_t i = 1; i <= n + 3; ++i) {
      REQUIRE(c.class_of(i) == mertens::oracle::class_label_bruteforce(n, i));
    }
  }
}

TEST_CASE("class sizes follow k - k^-") {
  const ClassStructure cs(16);
  CHECK(cs.class_size(16) == 8);
  CHECK(cs.class_size(8) == 3);
  CHECK(cs.class_size(1) == 1);
  CHECK(cs.predecessor(1) == 0);
  CHECK_THROWS_AS(cs.class_size(7), std::invalid_argument);
}

TEST_CASE("membership criterion and cardinality formulas, exhaustive to 1e4") {
  for (std::int64_t n = 1; n <= 10'000; ++n) {
    const ClassStructure cs(n);
    const auto s = static_cast<std::int64_t>(cs.size());
    REQUIRE(s == mertens::class_count_closed_form(n));
    REQUIRE(s == mertens::class_count_two_case(n));
    REQUIRE(cs.reps().front() == 1);
    REQUIRE(cs.reps().back() == n);
    REQUIRE(std::is_sorted(cs.reps().begin(), cs.reps().end()));
    if (n <= 2000) REQUIRE(reps_of(cs) == mertens::oracle::reps_bruteforce(n));
    for (std::int64_t k = 1; k <= std::min<std::int64_t>(n, 300); ++k) {
      REQUIRE(cs.contains(k) == (n / (k + 1) < n / k));
    }
  }
}

TEST_CASE("classes partition 1..n into consecutive intervals") {
  for (std::int64_t n = 1; n <= 1000; ++n) {
    const ClassStructure cs(n);
    std::int64_t covered = 0;
    for (const std::int64_t k : cs.reps()) {
      REQUIRE(cs.predecessor(k) == covered);
      REQUIRE(cs.class_size(k) > 0);
      for (std::int64_t i = covered + 1; i <= k; ++i) REQUIRE(cs.class_of(i) == k);
      covered = k;
    }
    REQUIRE(covered == n);
  }
}

TEST_CASE("large n builds in O(sqrt n) and keeps the invariants") {
  const std::int64_t n = 1'000'000'000'000LL;
  const ClassStructure cs(n);
  CHECK(static_cast<std::int64_t>(cs.size()) == mertens::class_count_closed_form(n));
  CHECK(cs.bar(cs.reps()[1]) == n / 2);
  CHECK(cs.class_of(n / 2 + 1) == n);
}

TEST_CASE("nested floor division lemma") {
  CHECK(mertens::floor_div_nested_check(16, 3, 2));
  CHECK(mertens::floor_div_nested_check(1, 1, 1));
  CHECK(mertens::floor_div_nested_check(1'000'000, 997, 991));
  std::mt19937_64 gen(7);
  std::uniform_int_distribution<std::int64_t> n_dist(1, 1'000'000'000'000LL);
  std::uniform_int_distribution<std::int64_t> d_dist(1, 2'000'000);
  for (int t = 0; t < 100'000; ++t) {
    REQUIRE(mertens::floor_div_nested_check(n_dist(gen), d_dist(gen), d_dist(gen)));
  }
}
