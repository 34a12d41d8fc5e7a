#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace brauer {

using BigInt = boost::multiprecision::cpp_int;

/// Least non-negative residue of x modulo m (m > 0).
inline std::uint64_t mod_u64(const BigInt& x, std::uint64_t m) {
  BigInt r = x % m;
  if (r < 0) r += m;
  return r.convert_to<std::uint64_t>();
}

/// p-adic valuation of a nonzero integer.
inline int valuation(BigInt x, std::uint64_t p) {
  if (x == 0) return INT32_MAX;
  int v = 0;
  while (x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

inline BigInt ipow(BigInt base, unsigned e) {
  BigInt r = 1;
  while (e) {
    if (e & 1u) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

inline std::string to_string(const BigInt& x) { return x.str(); }

}  // namespace brauer
