#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace sunit {

// Exact arbitrary-precision natural. Kept non-negative by construction
// throughout the library; cpp_int is signed so intermediate differences
// are safe.
using Natural = boost::multiprecision::cpp_int;

inline Natural gcd_nat(const Natural& a, const Natural& b) {
  return boost::multiprecision::gcd(a, b);
}

inline bool fits_u64(const Natural& n) {
  return n >= 0 && n <= Natural(std::numeric_limits<std::uint64_t>::max());
}

inline std::uint64_t to_u64(const Natural& n) {
  if (!fits_u64(n)) {
    throw std::overflow_error("value does not fit in 64 bits: " + n.str());
  }
  return n.convert_to<std::uint64_t>();
}

// Natural log of an arbitrarily large positive integer. Values beyond the
// double range are handled via the top 53 bits plus a power-of-two offset.
inline double log_natural(const Natural& n) {
  if (n <= 0) {
    throw std::domain_error("log_natural requires n >= 1");
  }
  const unsigned bits = (n == 1) ? 0 : boost::multiprecision::msb(n);
  if (bits <= 900) {
    return std::log(n.convert_to<double>());
  }
  const unsigned shift = bits - 52;
  const Natural top = n >> shift;
  return std::log(top.convert_to<double>()) +
         static_cast<double>(shift) * std::numbers::ln2;
}

inline std::string to_decimal(const Natural& n) { return n.str(); }

inline Natural parse_natural(const std::string& s) {
  if (s.empty()) {
    throw std::invalid_argument("empty integer literal");
  }
  for (char c : s) {
    if (c < '0' || c > '9') {
      throw std::invalid_argument("not a decimal natural: " + s);
    }
  }
  return Natural(s);
}

}  // namespace sunit
