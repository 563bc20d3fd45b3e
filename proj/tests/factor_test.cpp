#include <catch2/catch.hpp>

#include "sunit/factor.hpp"
#include "sunit/types.hpp"
#include "test_support.hpp"

using namespace sunit;

namespace {

Natural product(const std::vector<Natural>& fs) {
  Natural p = 1;
  for (const auto& f : fs) p *= f;
  return p;
}

}  // namespace

TEST_CASE("factorize worked examples") {
  CHECK(factorize(Natural(221)) == std::vector<Natural>{13, 17});
  CHECK(factorize(Natural(1)).empty());
  CHECK(factorize(Natural(12)) == std::vector<Natural>{2, 2, 3});
  CHECK_THROWS_AS(factorize(Natural(0)), std::invalid_argument);
}

TEST_CASE("factorize reconstructs every n up to 10^4") {
  const auto table = sieve_primes(100);
  for (std::uint64_t n = 1; n <= 10000; ++n) {
    const auto fs = factorize(Natural(n));
    CHECK(product(fs) == n);
    CHECK(std::is_sorted(fs.begin(), fs.end()));
    // and with an explicit prime table
    CHECK(product(factorize(Natural(n), table)) == n);
  }
}

TEST_CASE("factorize agrees with naive trial division") {
  for (std::uint64_t n :
       {2ull, 97ull, 1024ull, 6469693230ull, 600851475143ull,
        999999999989ull, 10000000000000068ull}) {
    const auto expected = testo::naive_factor(n);
    const auto got = factorize(Natural(n));
    REQUIRE(got.size() == expected.size());
    for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i] == expected[i]);
  }
}

TEST_CASE("factorize splits large semiprimes via rho") {
  // both factors above the trial bound
  const Natural p(1000003), q(1000033);
  CHECK(factorize(p * q) == std::vector<Natural>{p, q});
  // beyond 64 bits
  const Natural m1 = Natural("2305843009213693951");  // 2^61 - 1, prime
  const Natural m2 = Natural("2147483647");           // 2^31 - 1, prime
  CHECK(factorize(m1 * m2) == std::vector<Natural>{m2, m1});
}

TEST_CASE("factorize strips the primorial cleanly") {
  const auto expected = sieve_primes(53);
  const auto got = factorize(primorial(53));
  REQUIRE(got.size() == expected.size());
  for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i] == expected[i]);
}

TEST_CASE("squarefree smooth worked examples") {
  CHECK(is_squarefree_smooth(Natural(30), 7));
  CHECK_FALSE(is_squarefree_smooth(Natural(12), 7));
  CHECK_FALSE(is_squarefree_smooth(Natural(22), 7));
  CHECK(is_squarefree_smooth(Natural(1), 2));
  CHECK_THROWS_AS(is_squarefree_smooth(Natural(0), 5), std::invalid_argument);
}

TEST_CASE("squarefree smooth matches the definition exhaustively") {
  for (std::uint64_t y : {5ull, 7ull, 50ull}) {
    const auto primes = sieve_primes(y);
    for (std::uint64_t n = 1; n <= 10000; ++n) {
      CAPTURE(n, y);
      REQUIRE(is_squarefree_smooth(Natural(n), primes) ==
              testo::brute_squarefree_smooth(n, y));
    }
  }
}

TEST_CASE("distinct prime factors") {
  CHECK(distinct_prime_factors(Natural(12)) == std::vector<Natural>{2, 3});
  CHECK(distinct_prime_factors(Natural(1)).empty());
  CHECK(distinct_prime_factors(Natural(30)) == std::vector<Natural>{2, 3, 5});
}
