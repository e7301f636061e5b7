#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <random>
#include <vector>

#include "fixture_matrix.hpp"
#include "mertens/int_math.hpp"
#include "mertens/matrix_builders.hpp"
#include "mertens/mertens_sieve.hpp"
#include "mertens/quotient_algebra.hpp"
#include "oracles.hpp"
#include "paper_fixtures.hpp"

using mertens::IntegerMatrix;
using mertens::QuotientAlgebra;
using mertens::QuotientVector;
namespace fx = mertens::fixtures;

namespace {

std::vector<std::int64_t> as_vector(const fx::Row7& r) { return {r.begin(), r.end()}; }

}  // namespace

TEST_CASE("basis product table for n = 16") {
  const QuotientAlgebra algebra(16);
  CHECK(algebra.product(2, 3) == 8);
  CHECK_FALSE(algebra.product(2, 16).has_value());
  CHECK(algebra.product(1, 5) == 5);
  CHECK_THROWS_AS(algebra.product(6, 2), std::invalid_argument);
  for (std::size_t a = 0; a < 7; ++a) {
    for (std::size_t b = 0; b < 7; ++b) {
      const auto p = algebra.product(fx::kReps[a], fx::kReps[b]);
      CHECK(p.value_or(0) == fx::kBasisTable[a][b]);
    }
  }
}

TEST_CASE("product is commutative, associative and matches class arithmetic") {
  for (std::int64_t n = 1; n <= 200; ++n) {
    const QuotientAlgebra algebra(n);
    const auto reps = algebra.classes().reps();
    auto mul = [&](std::optional<std::int64_t> x, std::optional<std::int64_t> y) {
      if (!x || !y) return std::optional<std::int64_t>{};
      return algebra.product(*x, *y);
    };
    for (const std::int64_t i : reps) {
      for (const std::int64_t j : reps) {
        REQUIRE(algebra.product(i, j) == algebra.product(j, i));
        REQUIRE(algebra.product(i, j) == mertens::oracle::class_label_bruteforce(n, i * j));
        for (const std::int64_t k : reps) {
          REQUIRE(mul(mul(i, j), k) == mul(i, mul(j, k)));
        }
      }
    }
  }
}

TEST_CASE("class of a product depends only on the classes of the factors") {
  std::mt19937_64 gen(11);
  for (int t = 0; t < 40; ++t) {
    const std::int64_t n = std::uniform_int_distribution<std::int64_t>(1, 100'000)(gen);
    const QuotientAlgebra algebra(n);
    std::uniform_int_distribution<std::int64_t> pick(1, n);
    for (int pair = 0; pair < 500; ++pair) {
      const std::int64_t i = pick(gen);
      // Bias the second factor small so that i * j <= n happens often.
      const std::int64_t j = pair % 2 == 0 ? pick(gen) : 1 + pick(gen) % std::min<std::int64_t>(50, n);
      const auto ci = algebra.classes().class_of(i);
      const auto cj = algebra.classes().class_of(j);
      const auto cij = i * j > n ? std::nullopt : algebra.classes().class_of(i * j);
      INFO("n = " << n << ", i = " << i << ", j = " << j);
      REQUIRE(algebra.product(*ci, *cj) == cij);
    }
  }
}

TEST_CASE("projection of u, mu and the unit") {
  const QuotientAlgebra algebra(16);
  std::vector<std::int64_t> ones(16, 1);
  CHECK(algebra.project(ones).coeffs == as_vector(fx::kU));
  CHECK(algebra.project_ones().coeffs == as_vector(fx::kU));

  const auto table = mertens::MertensTable::build(16);
  std::vector<std::int64_t> mu;
  for (std::int64_t k = 1; k <= 16; ++k) mu.push_back(table.mobius(k));
  CHECK(algebra.project(mu).coeffs == as_vector(fx::kMu));
  CHECK(mertens::project_mobius(algebra, table).coeffs == as_vector(fx::kMu));

  std::vector<std::int64_t> e1(16, 0);
  e1[0] = 1;
  CHECK(algebra.project(e1) == algebra.unit());
  CHECK_THROWS_AS(algebra.project(std::vector<std::int64_t>(15, 1)), std::invalid_argument);
}

TEST_CASE("projection is an algebra morphism") {
  std::mt19937_64 gen(3);
  std::uniform_int_distribution<std::int64_t> coeff(-5, 5);
  for (std::int64_t n : {1, 2, 7, 16, 30, 99, 250}) {
    const QuotientAlgebra algebra(n);
    for (int t = 0; t < 5; ++t) {
      std::vector<std::int64_t> a(static_cast<std::size_t>(n) + 1, 0);
      std::vector<std::int64_t> b(a.size(), 0);
      for (std::size_t i = 1; i < a.size(); ++i) {
        a[i] = coeff(gen);
        b[i] = coeff(gen);
      }
      const auto ab = mertens::oracle::dirichlet_convolution(a, b, n);
      auto project = [&](const std::vector<std::int64_t>& v) {
        return algebra.project(std::span<const std::int64_t>(v).subspan(1));
      };
      REQUIRE(project(a).coeffs == mertens::oracle::class_sums_bruteforce(n, a));
      REQUIRE(algebra.convolve(project(a), project(b)) == project(ab));
    }
  }
}

TEST_CASE("convolution laws") {
  const QuotientAlgebra algebra(16);
  const auto table = mertens::MertensTable::build(16);
  const QuotientVector u = algebra.project_ones();
  const QuotientVector mu = mertens::project_mobius(algebra, table);
  CHECK(algebra.convolve(u, mu) == algebra.unit());
  CHECK(algebra.convolve(u, algebra.unit()) == u);
  CHECK(algebra.convolve(algebra.basis(2), algebra.basis(3)) == algebra.basis(8));
  CHECK(algebra.convolve(algebra.basis(2), algebra.basis(16)) == algebra.zero());
  CHECK(algebra.convolve(u, mu) == algebra.convolve(mu, u));

  const QuotientAlgebra other(17);
  CHECK_THROWS_AS(algebra.convolve(u, other.unit()), std::invalid_argument);

  QuotientVector huge = algebra.unit();
  huge.coeffs[0] = std::int64_t{1} << 40;
  CHECK_THROWS_AS(algebra.convolve(huge, huge), mertens::OverflowError);
}

TEST_CASE("regular representation of the worked example") {
  const QuotientAlgebra algebra(16);
  const auto table = mertens::MertensTable::build(16);
  CHECK(algebra.regular_representation(algebra.unit()) == IntegerMatrix::identity(7));
  CHECK(algebra.regular_representation(algebra.basis(2)) == fx::to_matrix(fx::kRho2));
  CHECK(algebra.regular_representation(algebra.basis(3)) == fx::to_matrix(fx::kRho3));
  CHECK(algebra.regular_representation(algebra.basis(4)) == fx::to_matrix(fx::kRho4));
  CHECK(algebra.regular_representation(algebra.basis(5)) == fx::to_matrix(fx::kRho5));
  CHECK(algebra.regular_representation(algebra.basis(8)) == fx::to_matrix(fx::kRho8));
  CHECK(algebra.regular_representation(algebra.basis(16)) == fx::to_matrix(fx::kRho16));
  CHECK(algebra.regular_representation(algebra.project_ones()) == fx::to_matrix(fx::kRhoU));
  CHECK(algebra.regular_representation(mertens::project_mobius(algebra, table)) ==
        fx::to_matrix(fx::kRhoMu));
}

TEST_CASE("regular representation is multiplicative on the basis") {
  for (std::int64_t n = 1; n <= 100; ++n) {
    const QuotientAlgebra algebra(n);
    const auto reps = algebra.classes().reps();
    for (const std::int64_t i : reps) {
      const IntegerMatrix ri = algebra.regular_representation(algebra.basis(i));
      for (const std::int64_t j : reps) {
        const IntegerMatrix rj = algebra.regular_representation(algebra.basis(j));
        const auto p = algebra.product(i, j);
        const IntegerMatrix expected = p ? algebra.regular_representation(algebra.basis(*p))
                                         : IntegerMatrix(algebra.dimension());
        REQUIRE(ri * rj == expected);
      }
      // Entries are 0/1 with at most one 1 per column.
      for (std::size_t c = 0; c < ri.size(); ++c) {
        std::int64_t ones = 0;
        for (std::size_t r = 0; r < ri.size(); ++r) {
          REQUIRE((ri(r, c) == 0 || ri(r, c) == 1));
          ones += ri(r, c);
        }
        REQUIRE(ones <= 1);
      }
    }
  }
}

TEST_CASE("first column of rho(x) is x") {
  std::mt19937_64 gen(5);
  std::uniform_int_distribution<std::int64_t> coeff(-100, 100);
  for (std::int64_t n : {1, 16, 97, 1000}) {
    const QuotientAlgebra algebra(n);
    QuotientVector x = algebra.zero();
    for (auto& c : x.coeffs) c = coeff(gen);
    const IntegerMatrix rho = algebra.regular_representation(x);
    for (std::size_t r = 0; r < algebra.dimension(); ++r) REQUIRE(rho(r, 0) == x.coeffs[r]);
  }
}
