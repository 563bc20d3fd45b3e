#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "sunit/bigint.hpp"
#include "sunit/factor.hpp"
#include "sunit/primes.hpp"

namespace sunit {

// Documented default; every seeded run is reproducible with it.
inline constexpr std::uint64_t kDefaultSeed = 1729;

// A finite sorted set of distinct primes. Every element is checked with the
// deterministic 64-bit primality test on construction.
class PrimeSet {
 public:
  PrimeSet() = default;

  explicit PrimeSet(std::vector<std::uint64_t> primes) : primes_(std::move(primes)) {
    std::sort(primes_.begin(), primes_.end());
    primes_.erase(std::unique(primes_.begin(), primes_.end()), primes_.end());
    for (std::uint64_t p : primes_) {
      if (!is_prime_u64(p)) {
        throw std::invalid_argument("PrimeSet: " + std::to_string(p) +
                                    " is not prime");
      }
    }
  }

  const std::vector<std::uint64_t>& primes() const { return primes_; }
  std::size_t size() const { return primes_.size(); }

  bool contains(std::uint64_t p) const {
    return std::binary_search(primes_.begin(), primes_.end(), p);
  }

  PrimeSet unite(const PrimeSet& other) const {
    std::vector<std::uint64_t> merged = primes_;
    merged.insert(merged.end(), other.primes_.begin(), other.primes_.end());
    return PrimeSet(std::move(merged));
  }

 private:
  std::vector<std::uint64_t> primes_;
};

// A positive integer carried with its full factorization into distinct
// primes. value == 1 iff the factor list is empty.
class SmoothSquarefree {
 public:
  SmoothSquarefree() : value_(1) {}

  explicit SmoothSquarefree(std::vector<std::uint64_t> factors)
      : factors_(std::move(factors)) {
    std::sort(factors_.begin(), factors_.end());
    value_ = 1;
    std::uint64_t prev = 0;
    for (std::uint64_t p : factors_) {
      if (p == prev) {
        throw std::invalid_argument("SmoothSquarefree: repeated factor " +
                                    std::to_string(p));
      }
      if (!is_prime_u64(p)) {
        throw std::invalid_argument("SmoothSquarefree: " + std::to_string(p) +
                                    " is not prime");
      }
      prev = p;
      value_ *= p;
    }
  }

  static SmoothSquarefree one() { return SmoothSquarefree(); }

  // Factorizes and rejects anything that is not squarefree with 64-bit
  // prime factors.
  static SmoothSquarefree from_value(const Natural& value) {
    if (value < 1) {
      throw std::invalid_argument("SmoothSquarefree: value must be >= 1");
    }
    std::vector<std::uint64_t> fs;
    for (const Natural& f : factorize(value)) {
      if (!fs.empty() && Natural(fs.back()) == f) {
        throw std::invalid_argument("SmoothSquarefree: " + value.str() +
                                    " is not squarefree");
      }
      fs.push_back(to_u64(f));
    }
    return SmoothSquarefree(std::move(fs));
  }

  const Natural& value() const { return value_; }
  const std::vector<std::uint64_t>& factors() const { return factors_; }
  std::size_t omega() const { return factors_.size(); }

  bool smooth_under(std::uint64_t y) const {
    return factors_.empty() || factors_.back() <= y;
  }

  bool coprime_with(const SmoothSquarefree& other) const {
    // Disjoint factor lists suffice since both sides are squarefree.
    auto a = factors_.begin();
    auto b = other.factors_.begin();
    while (a != factors_.end() && b != other.factors_.end()) {
      if (*a == *b) return false;
      (*a < *b) ? ++a : ++b;
    }
    return true;
  }

  friend bool operator==(const SmoothSquarefree& x, const SmoothSquarefree& y) {
    return x.value_ == y.value_;
  }
  friend bool operator<(const SmoothSquarefree& x, const SmoothSquarefree& y) {
    return x.value_ < y.value_;
  }

 private:
  Natural value_;
  std::vector<std::uint64_t> factors_;
};

// Exact multiplicity census over a stream of naturals. popular is the
// smallest value attaining the maximal count.
struct Census {
  std::map<Natural, std::size_t> counts;
  std::optional<Natural> popular;
  std::size_t popular_count = 0;
  std::size_t total = 0;

  void add(const Natural& value) {
    ++counts[value];
    ++total;
  }

  void finalize() {
    popular.reset();
    popular_count = 0;
    for (const auto& [value, count] : counts) {
      if (count > popular_count) {
        popular = value;
        popular_count = count;
      }
    }
  }
};

template <typename Range, typename Proj>
Census make_census(const Range& items, Proj proj) {
  Census census;
  for (const auto& item : items) census.add(proj(item));
  census.finalize();
  return census;
}

}  // namespace sunit
