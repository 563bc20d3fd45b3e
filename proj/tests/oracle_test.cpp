#include <catch2/catch.hpp>

#include "sunit/oracle.hpp"
#include "test_support.hpp"

using namespace sunit;

namespace {

std::vector<Natural> lift(const std::vector<std::uint64_t>& xs) {
  return {xs.begin(), xs.end()};
}

}  // namespace

TEST_CASE("enumerate_sunits worked examples") {
  CHECK(enumerate_sunits(PrimeSet({2, 3}), 20) ==
        lift({1, 2, 3, 4, 6, 8, 9, 12, 16, 18}));
  CHECK(enumerate_sunits(PrimeSet(), 10) == lift({1}));
  CHECK_THROWS_AS(enumerate_sunits(PrimeSet({2}), 0), std::invalid_argument);
}

TEST_CASE("enumerate_sunits equals a direct filter") {
  for (const auto& S : {std::vector<std::uint64_t>{2, 3, 5},
                        std::vector<std::uint64_t>{3, 7},
                        std::vector<std::uint64_t>{2, 11, 13}}) {
    const auto got = enumerate_sunits(PrimeSet(S), 1000);
    CHECK(got == lift(testo::filter_sunits(S, 1000)));
    CHECK(std::is_sorted(got.begin(), got.end()));
    CHECK(std::adjacent_find(got.begin(), got.end()) == got.end());
  }
}

TEST_CASE("count_abc frozen small cases") {
  const auto only = count_abc(PrimeSet({2}), 100);
  REQUIRE(only.size() == 1);
  CHECK(only[0].a == 1);
  CHECK(only[0].b == 1);
  CHECK(only[0].c == 2);

  const auto small = count_abc(PrimeSet({2, 3}), 10);
  const bool has_189 = std::any_of(small.begin(), small.end(), [](const auto& s) {
    return s.a == 1 && s.b == 8 && s.c == 9;
  });
  CHECK(has_189);
  CHECK_THROWS_AS(count_abc(PrimeSet({2}), 1), std::invalid_argument);
}

TEST_CASE("count_abc equals the quadratic brute force") {
  const std::vector<std::uint64_t> S{2, 3, 5};
  const auto got = count_abc(PrimeSet(S), 10000);
  const auto expected = testo::brute_abc(S, 10000);
  REQUIRE(got.size() == expected.size());
  for (std::size_t i = 0; i < got.size(); ++i) {
    CHECK(got[i].a == std::get<0>(expected[i]));
    CHECK(got[i].b == std::get<1>(expected[i]));
    CHECK(got[i].c == std::get<2>(expected[i]));
  }
  // sorted by (c, a)
  for (std::size_t i = 1; i < got.size(); ++i) {
    CHECK(std::tie(got[i - 1].c, got[i - 1].a) < std::tie(got[i].c, got[i].a));
  }
}

TEST_CASE("count_abc output passes the independent checker") {
  const PrimeSet S({2, 3, 7});
  for (const auto& sol : count_abc(S, 2000)) {
    CHECK(sol.a + sol.b == sol.c);
    CHECK(sol.a <= sol.b);
    CHECK(gcd_nat(sol.a, sol.b) == 1);
    CHECK(verify_solution(sol.a, sol.b, sol.c, S).has_value());
    Natural rebuilt = 1;
    for (const auto& [p, e] : sol.a_factors)
      for (unsigned i = 0; i < e; ++i) rebuilt *= p;
    CHECK(rebuilt == sol.a);
  }
}

TEST_CASE("count_a1c frozen small cases") {
  const auto pairs = count_a1c(PrimeSet({2, 3}), 10);
  REQUIRE(pairs.size() == 4);
  CHECK(pairs[0].first == 1);
  CHECK(pairs[1].first == 2);
  CHECK(pairs[2].first == 3);
  CHECK(pairs[3].first == 8);
  CHECK(pairs[3].second == 9);

  const auto two = count_a1c(PrimeSet({2}), 100);
  REQUIRE(two.size() == 1);
  CHECK(two[0].first == 1);

  CHECK(count_a1c(PrimeSet(), 10).empty());
}

TEST_CASE("count_a1c equals the direct consecutive filter") {
  for (const auto& S : {std::vector<std::uint64_t>{2, 3},
                        std::vector<std::uint64_t>{2, 3, 5, 7}}) {
    const auto got = count_a1c(PrimeSet(S), 5000);
    const auto expected = testo::brute_a1c(S, 5000);
    REQUIRE(got.size() == expected.size());
    for (std::size_t i = 0; i < got.size(); ++i) {
      CHECK(got[i].first == expected[i]);
      CHECK(got[i].second == expected[i] + 1);
    }
  }
}

TEST_CASE("counts are monotone in H and S") {
  const auto base = count_abc(PrimeSet({2, 3}), 50).size();
  CHECK(base <= count_abc(PrimeSet({2, 3}), 500).size());
  CHECK(count_abc(PrimeSet({2, 3}), 500).size() <=
        count_abc(PrimeSet({2, 3, 5}), 500).size());
  CHECK(count_a1c(PrimeSet({2, 3}), 50).size() <=
        count_a1c(PrimeSet({2, 3, 5}), 50).size());
}

TEST_CASE("consecutive divisors worked examples") {
  CHECK(consecutive_divisor_count(Natural(90), 90) == std::vector<Natural>{1, 2, 5, 9});
  CHECK(consecutive_divisor_count(Natural(2), 10) == std::vector<Natural>{1});
  const Natural n = primorial(20) * 3;
  const auto ds = consecutive_divisor_count(n, 1000000);
  CHECK(std::binary_search(ds.begin(), ds.end(), Natural(9)));
  for (const auto& d : ds) {
    CHECK(n % d == 0);
    CHECK(n % (d + 1) == 0);
  }
  CHECK_THROWS_AS(consecutive_divisor_count(Natural(1), 10), std::invalid_argument);
}

TEST_CASE("is_sunit and factor_over") {
  const PrimeSet S({2, 5});
  CHECK(is_sunit(Natural(40), S));
  CHECK_FALSE(is_sunit(Natural(6), S));
  CHECK(is_sunit(Natural(1), S));
  const auto fm = factor_over(Natural(40), S);
  REQUIRE(fm.has_value());
  REQUIRE(fm->size() == 2);
  CHECK((*fm)[0] == std::make_pair(std::uint64_t{2}, 3u));
  CHECK((*fm)[1] == std::make_pair(std::uint64_t{5}, 1u));
}
