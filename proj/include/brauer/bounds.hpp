#pragma once

// Genus of cyclic étale covers, the cone surjectivity bound
// q > (g' + sqrt(g'^2 - 1))^2, Hasse–Weil point existence, and the
// diagonal-quartic threshold. All comparisons are exact.

#include <cstdint>
#include <string>

#include "brauer/bigint.hpp"

namespace brauer {

/// a + b*sqrt(c) with b, c >= 0.
struct ExactSurd {
  BigInt a = 0, b = 0, c = 0;

  /// Whether the integer x is strictly greater than this number.
  bool less_than(const BigInt& x) const;
  BigInt floor() const;
  BigInt ceil() const;
  bool is_integer() const;
  /// Truncated decimal expansion with the given number of digits after the point.
  std::string decimal(unsigned digits = 4) const;
  /// "a + b*sqrt(c)".
  std::string str() const;
};

/// Genus of a connected étale cyclic cover of degree N of a genus-g curve: N(g-1)+1.
std::int64_t rh_genus(std::int64_t g, std::int64_t N);

struct BoundReport {
  std::int64_t g = 0;
  std::int64_t N = 1;
  std::int64_t g_prime = 0;
  bool vacuous = false;       // g' <= 1: every q satisfies the bound
  ExactSurd threshold;        // (g' + sqrt(g'^2 - 1))^2, or 1 when vacuous
  BigInt integer_threshold;   // ceiling of threshold

  /// q > threshold.
  bool satisfied_by(const BigInt& q) const;
};

BoundReport size_bound(std::int64_t g, std::int64_t N);

/// q + 1 - 2g*sqrt(q) > 0, so every smooth projective genus-g curve over F_q has a point.
bool hasse_weil_has_point(const BigInt& q, std::int64_t g);

struct QuarticThresholdReport {
  BigInt p;
  std::int64_t br_order_bound = 0;
  BoundReport computed;          // size_bound(3, br_order_bound)
  BigInt published_threshold;        // 2^54 + 2^28 + 1
  BigInt difference_ceiling;     // ceil(computed) - published_threshold
  bool passes = false;           // p > published_threshold
  bool passes_computed = false;  // p > computed threshold
};

inline constexpr std::int64_t kQuarticBrOrderBound = std::int64_t{1} << 25;
BigInt quartic_published_threshold();
QuarticThresholdReport quartic_threshold_check(const BigInt& p, std::int64_t br_order_bound = kQuarticBrOrderBound);

}  // namespace brauer
