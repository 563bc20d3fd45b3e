#pragma once

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <stdexcept>
#include <vector>

#include "sunit/bigint.hpp"

namespace sunit {

namespace detail {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b,
                                std::uint64_t m) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp,
                                std::uint64_t m) {
  std::uint64_t r = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) r = mulmod_u64(r, base, m);
    base = mulmod_u64(base, base, m);
    exp >>= 1;
  }
  return r;
}

}  // namespace detail

// Deterministic Miller-Rabin. The 12-base set below is a proven witness set
// for every n < 3.3e24, which covers the full 64-bit range.
inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = detail::powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = detail::mulmod_u64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

inline std::uint64_t isqrt_u64(std::uint64_t n) {
  if (n == 0) return 0;
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r > n / r) --r;
  while ((r + 1) <= n / (r + 1)) ++r;
  return r;
}

// Classic Eratosthenes up to limit inclusive.
inline std::vector<std::uint64_t> sieve_primes(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  if (limit < 2) return out;
  std::vector<bool> comp(limit + 1, false);
  for (std::uint64_t i = 2; i * i <= limit; ++i) {
    if (!comp[i]) {
      for (std::uint64_t j = i * i; j <= limit; j += i) comp[j] = true;
    }
  }
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (!comp[i]) out.push_back(i);
  }
  return out;
}

// All primes p with lo <= p <= hi, ascending. Segmented so large lo does not
// force sieving from zero.
inline std::vector<std::uint64_t> primes_in_range(std::uint64_t lo,
                                                  std::uint64_t hi) {
  if (lo > hi) {
    throw std::invalid_argument("primes_in_range: lo > hi");
  }
  std::vector<std::uint64_t> out;
  if (hi < 2) return out;
  lo = std::max<std::uint64_t>(lo, 2);
  const auto base = sieve_primes(isqrt_u64(hi));
  std::vector<bool> comp(hi - lo + 1, false);
  for (std::uint64_t p : base) {
    std::uint64_t start = std::max(p * p, ((lo + p - 1) / p) * p);
    for (std::uint64_t j = start; j <= hi; j += p) {
      comp[j - lo] = true;
    }
  }
  for (std::uint64_t v = lo; v <= hi; ++v) {
    if (!comp[v - lo]) out.push_back(v);
  }
  return out;
}

inline std::size_t prime_count(std::uint64_t x) {
  if (x < 2) return 0;
  return primes_in_range(2, x).size();
}

// Product of all primes <= y; 1 when none.
inline Natural primorial(std::uint64_t y) {
  Natural n = 1;
  for (std::uint64_t p : sieve_primes(y)) n *= p;
  return n;
}

// --- on-disk prime table cache ------------------------------------------
//
// Text format: first line is the sieving bound, then one prime per line.
// A cached table with a bound >= the requested one is reused by filtering.

inline std::optional<std::vector<std::uint64_t>> load_prime_cache(
    const std::filesystem::path& file, std::uint64_t limit) {
  std::ifstream in(file);
  if (!in) return std::nullopt;
  std::uint64_t cached_limit = 0;
  if (!(in >> cached_limit) || cached_limit < limit) return std::nullopt;
  std::vector<std::uint64_t> primes;
  std::uint64_t p = 0, prev = 0;
  while (in >> p) {
    if (p <= prev) return std::nullopt;  // corrupt: not strictly increasing
    prev = p;
    if (p > limit) break;
    primes.push_back(p);
  }
  if (in.bad()) return std::nullopt;
  return primes;
}

inline void save_prime_cache(const std::filesystem::path& file,
                             std::uint64_t limit,
                             const std::vector<std::uint64_t>& primes) {
  std::filesystem::create_directories(file.parent_path());
  std::ofstream out(file, std::ios::trunc);
  if (!out) {
    throw std::runtime_error("cannot write prime cache: " + file.string());
  }
  out << limit << '\n';
  for (std::uint64_t p : primes) out << p << '\n';
}

// Returns primes <= limit, consulting cache_dir when provided.
inline std::vector<std::uint64_t> cached_primes(
    std::uint64_t limit, const std::optional<std::filesystem::path>& cache_dir) {
  if (!cache_dir) return sieve_primes(limit);
  const auto file = *cache_dir / "prime_table.txt";
  if (auto hit = load_prime_cache(file, limit)) return *hit;
  auto primes = sieve_primes(limit);
  save_prime_cache(file, limit, primes);
  return primes;
}

}  // namespace sunit
