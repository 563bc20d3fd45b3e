#pragma once

#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

#include "sunit/bigint.hpp"
#include "sunit/rng.hpp"

namespace sunit {

inline Natural binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  Natural r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;  // exact at every step
  }
  return r;
}

// rank -> k-subset of {0,...,n-1} in lexicographic order.
inline std::vector<std::size_t> unrank_combination(Natural rank, std::size_t n,
                                                   std::size_t k) {
  if (rank < 0 || rank >= binomial(n, k)) {
    throw std::out_of_range("unrank_combination: rank out of range");
  }
  std::vector<std::size_t> combo;
  combo.reserve(k);
  std::size_t next = 0;
  for (std::size_t picked = 0; picked < k; ++picked) {
    for (std::size_t cand = next;; ++cand) {
      const Natural with_cand = binomial(n - cand - 1, k - picked - 1);
      if (rank < with_cand) {
        combo.push_back(cand);
        next = cand + 1;
        break;
      }
      rank -= with_cand;
    }
  }
  return combo;
}

// count distinct uniform draws from [0, total), ascending.
inline std::vector<Natural> sample_distinct_below(SeededRng& rng,
                                                  const Natural& total,
                                                  std::size_t count) {
  if (Natural(count) > total) {
    throw std::invalid_argument("sample_distinct_below: count > total");
  }
  std::set<Natural> chosen;
  while (chosen.size() < count) {
    chosen.insert(rng.below(total));
  }
  return {chosen.begin(), chosen.end()};
}

}  // namespace sunit
