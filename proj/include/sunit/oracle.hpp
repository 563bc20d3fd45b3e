#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <queue>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sunit/bigint.hpp"
#include "sunit/types.hpp"

namespace sunit {

// prime -> exponent, ascending by prime.
using FactorMap = std::vector<std::pair<std::uint64_t, unsigned>>;

// A verified coprime solution of a + b = c over an ambient prime set.
struct SUnitSolution {
  Natural a, b, c;
  FactorMap a_factors, b_factors, c_factors;
};

// Full factorization of n over S by repeated division; nullopt when some
// cofactor survives outside S.
inline std::optional<FactorMap> factor_over(const Natural& n,
                                            const PrimeSet& S) {
  if (n < 1) return std::nullopt;
  FactorMap fm;
  Natural rest = n;
  for (std::uint64_t p : S.primes()) {
    unsigned e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    if (e > 0) fm.emplace_back(p, e);
  }
  if (rest != 1) return std::nullopt;
  return fm;
}

inline bool is_sunit(const Natural& n, const PrimeSet& S) {
  return factor_over(n, S).has_value();
}

// Independent checker: recomputes every SUnitSolution invariant from scratch.
inline std::optional<SUnitSolution> verify_solution(const Natural& a,
                                                    const Natural& b,
                                                    const Natural& c,
                                                    const PrimeSet& S) {
  if (!(a >= 1 && a <= b && b < c)) return std::nullopt;
  if (a + b != c) return std::nullopt;
  if (gcd_nat(a, b) != 1) return std::nullopt;
  auto fa = factor_over(a, S);
  auto fb = factor_over(b, S);
  auto fc = factor_over(c, S);
  if (!fa || !fb || !fc) return std::nullopt;
  return SUnitSolution{a, b, c, std::move(*fa), std::move(*fb), std::move(*fc)};
}

// All S-units up to H, ascending, starting at 1. Best-first expansion over
// exponent vectors: the frontier is a min-heap, each popped value v with
// anchor index i spawns v*p_j for j >= i, so every unit appears exactly once
// and pops come out sorted.
inline std::vector<Natural> enumerate_sunits(const PrimeSet& S,
                                             const Natural& H) {
  if (H < 1) {
    throw std::invalid_argument("enumerate_sunits requires H >= 1");
  }
  using Node = std::pair<Natural, std::size_t>;
  auto cmp = [](const Node& x, const Node& y) { return x.first > y.first; };
  std::priority_queue<Node, std::vector<Node>, decltype(cmp)> frontier(cmp);
  frontier.emplace(1, 0);
  std::vector<Natural> out;
  const auto& primes = S.primes();
  while (!frontier.empty()) {
    auto [value, idx] = frontier.top();
    frontier.pop();
    out.push_back(value);
    for (std::size_t j = idx; j < primes.size(); ++j) {
      Natural child = value * primes[j];
      if (child > H) break;  // primes ascending, later children only grow
      frontier.emplace(std::move(child), j);
    }
  }
  return out;
}

// All solutions of a + b = c in coprime S-units with c <= H, normalized
// a <= b, sorted by (c, a).
inline std::vector<SUnitSolution> count_abc(const PrimeSet& S,
                                            const Natural& H) {
  if (H < 2) {
    throw std::invalid_argument("count_abc requires H >= 2");
  }
  const auto units = enumerate_sunits(S, H);
  const std::set<Natural> unit_set(units.begin(), units.end());
  std::vector<SUnitSolution> solutions;
  for (const Natural& c : units) {
    if (c < 2) continue;
    for (const Natural& a : units) {
      if (2 * a > c) break;
      const Natural b = c - a;
      if (gcd_nat(a, b) != 1) continue;
      if (!unit_set.count(b)) continue;
      auto sol = verify_solution(a, b, c, S);
      if (!sol) {
        throw std::logic_error("count_abc produced an unverifiable triple");
      }
      solutions.push_back(std::move(*sol));
    }
  }
  return solutions;
}

// All a with a and a+1 both S-units and a+1 <= H; scans consecutive entries
// of the unit enumeration.
inline std::vector<std::pair<Natural, Natural>> count_a1c(const PrimeSet& S,
                                                          const Natural& H) {
  if (H < 2) {
    throw std::invalid_argument("count_a1c requires H >= 2");
  }
  const auto units = enumerate_sunits(S, H);
  std::vector<std::pair<Natural, Natural>> pairs;
  for (std::size_t i = 0; i + 1 < units.size(); ++i) {
    if (units[i] + 1 == units[i + 1]) {
      pairs.emplace_back(units[i], units[i + 1]);
    }
  }
  return pairs;
}

// All d <= bound with d(d+1) | N, by trial division. d and d+1 are coprime,
// so d(d+1) | N is exactly d | N together with (d+1) | N.
inline std::vector<Natural> consecutive_divisor_count(const Natural& N,
                                                      const Natural& bound) {
  if (N < 2) {
    throw std::invalid_argument("consecutive_divisor_count requires N >= 2");
  }
  std::vector<Natural> out;
  for (Natural d = 1; d <= bound; ++d) {
    if (N % d == 0 && N % (d + 1) == 0) out.push_back(d);
  }
  return out;
}

}  // namespace sunit
