#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>

#include "sunit/bigint.hpp"

namespace sunit {

// Deterministic RNG wrapper. std::mt19937_64 output is pinned by the
// standard; the rejection loops below avoid std::uniform_int_distribution,
// whose mapping is implementation-defined.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("SeededRng::below(0)");
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t v;
    do {
      v = engine_();
    } while (v >= limit);
    return v % bound;
  }

  // Uniform in [0, bound) for arbitrary-precision bounds: draw the bit
  // length of bound-1 and reject overshoots.
  Natural below(const Natural& bound) {
    if (bound <= 0) throw std::invalid_argument("SeededRng::below: bound <= 0");
    if (bound == 1) return 0;
    const unsigned bits = boost::multiprecision::msb(bound - 1) + 1;
    while (true) {
      Natural v = 0;
      unsigned got = 0;
      while (got < bits) {
        v <<= 64;
        v |= Natural(engine_());
        got += 64;
      }
      v >>= (got - bits);
      if (v < bound) return v;
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace sunit
