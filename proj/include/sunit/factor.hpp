#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

#include "sunit/bigint.hpp"
#include "sunit/primes.hpp"

namespace sunit {

namespace detail {

inline std::uint64_t pollard_brent_u64(std::uint64_t n, std::uint64_t c,
                                       std::uint64_t x0) {
  // Brent's cycle variant of Pollard rho with batched gcds.
  std::uint64_t y = x0, r = 1, q = 1, g = 1, x = 0, ys = 0;
  auto f = [&](std::uint64_t v) { return (mulmod_u64(v, v, n) + c) % n; };
  const std::uint64_t batch = 128;
  while (g == 1) {
    x = y;
    for (std::uint64_t i = 0; i < r; ++i) y = f(y);
    std::uint64_t k = 0;
    while (k < r && g == 1) {
      ys = y;
      const std::uint64_t lim = std::min(batch, r - k);
      for (std::uint64_t i = 0; i < lim; ++i) {
        y = f(y);
        q = mulmod_u64(q, x > y ? x - y : y - x, n);
      }
      g = std::gcd(q, n);
      k += batch;
    }
    r *= 2;
  }
  if (g == n) {
    do {
      ys = f(ys);
      g = std::gcd(x > ys ? x - ys : ys - x, n);
    } while (g == 1);
  }
  return g;
}

inline std::uint64_t find_factor_u64(std::uint64_t n) {
  // n composite, odd, no factor below the trial bound.
  for (std::uint64_t c = 1;; ++c) {
    std::uint64_t g = pollard_brent_u64(n, c, 2 + c);
    if (g != n) return g;
  }
}

inline void factorize_u64_into(std::uint64_t n,
                               std::vector<std::uint64_t>& out) {
  if (n == 1) return;
  if (is_prime_u64(n)) {
    out.push_back(n);
    return;
  }
  const std::uint64_t g = find_factor_u64(n);
  factorize_u64_into(g, out);
  factorize_u64_into(n / g, out);
}

// Probable-prime test for values beyond 64 bits. Deterministic below 2^64;
// above that 64 fixed pseudorandom bases are used, which is far past any
// desk-scale doubt.
inline bool is_probable_prime(const Natural& n) {
  if (fits_u64(n)) return is_prime_u64(n.convert_to<std::uint64_t>());
  if (n % 2 == 0) return false;
  Natural d = n - 1;
  unsigned s = 0;
  while (d % 2 == 0) {
    d >>= 1;
    ++s;
  }
  std::mt19937_64 rng(0x5eedbeef17290042ULL);
  for (int round = 0; round < 64; ++round) {
    Natural a = 2 + Natural(rng()) % (n - 3);
    Natural x = boost::multiprecision::powm(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = (x * x) % n;
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

inline Natural pollard_rho_big(const Natural& n) {
  for (std::uint64_t c = 1;; ++c) {
    Natural x = 2, y = 2, g = 1;
    while (g == 1) {
      x = (x * x + c) % n;
      y = (y * y + c) % n;
      y = (y * y + c) % n;
      g = gcd_nat(x > y ? x - y : y - x, n);
    }
    if (g != n) return g;
  }
}

inline void factorize_big_into(const Natural& n, std::vector<Natural>& out) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    out.push_back(n);
    return;
  }
  const Natural g = pollard_rho_big(n);
  factorize_big_into(g, out);
  factorize_big_into(n / g, out);
}

}  // namespace detail

inline constexpr std::uint64_t kDefaultTrialBound = 100000;

// Prime factorization with multiplicity, ascending. Trial division first,
// then rho splitting on whatever cofactor survives. A supplied table must
// hold every prime up to its last entry.
inline std::vector<Natural> factorize(const Natural& n,
                                      std::span<const std::uint64_t> table = {},
                                      std::uint64_t trial_bound = kDefaultTrialBound) {
  if (n < 1) {
    throw std::invalid_argument("factorize requires n >= 1");
  }
  std::vector<Natural> out;
  Natural rest = n;
  auto strip = [&](std::uint64_t p) {
    while (rest % p == 0) {
      out.emplace_back(p);
      rest /= p;
    }
  };
  std::uint64_t covered = trial_bound;
  if (!table.empty()) {
    for (std::uint64_t p : table) {
      if (Natural(p) * p > rest) break;
      strip(p);
    }
    covered = table.back();
  } else {
    strip(2);
    strip(3);
    for (std::uint64_t d = 5; d <= trial_bound; d += 6) {
      if (Natural(d) * d > rest) break;
      strip(d);
      strip(d + 2);
    }
  }
  if (rest > 1) {
    if (rest <= Natural(covered) * covered) {
      out.push_back(rest);  // no divisor up to sqrt(rest), so rest is prime
    } else if (fits_u64(rest)) {
      std::vector<std::uint64_t> small;
      detail::factorize_u64_into(rest.convert_to<std::uint64_t>(), small);
      for (std::uint64_t p : small) out.emplace_back(p);
    } else {
      detail::factorize_big_into(rest, out);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<std::uint64_t> factorize_u64(std::uint64_t n) {
  auto fs = factorize(Natural(n));
  std::vector<std::uint64_t> out;
  out.reserve(fs.size());
  for (const auto& f : fs) out.push_back(to_u64(f));
  return out;
}

inline std::vector<Natural> distinct_prime_factors(const Natural& n) {
  auto fs = factorize(n);
  fs.erase(std::unique(fs.begin(), fs.end()), fs.end());
  return fs;
}

// True iff n is squarefree with every prime factor <= y. Divides out each
// prime at most once; a second hit or a surviving cofactor is a rejection.
inline bool is_squarefree_smooth(const Natural& n,
                                 std::span<const std::uint64_t> primes_upto_y) {
  if (n < 1) {
    throw std::invalid_argument("is_squarefree_smooth requires n >= 1");
  }
  Natural rest = n;
  for (std::uint64_t p : primes_upto_y) {
    if (rest == 1) break;
    if (rest % p == 0) {
      rest /= p;
      if (rest % p == 0) return false;
    }
  }
  return rest == 1;
}

inline bool is_squarefree_smooth(const Natural& n, std::uint64_t y) {
  const auto primes = sieve_primes(y);
  return is_squarefree_smooth(n, primes);
}

}  // namespace sunit
