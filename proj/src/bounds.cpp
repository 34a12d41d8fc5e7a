#include "brauer/bounds.hpp"

#include <sstream>

#include "brauer/error.hpp"

namespace brauer {

namespace {
BigInt isqrt(const BigInt& x) { return boost::multiprecision::sqrt(x); }
}  // namespace

bool ExactSurd::less_than(const BigInt& x) const {
  // x > a + b*sqrt(c)  <=>  x - a > 0 and (x - a)^2 > b^2 c
  const BigInt d = x - a;
  if (d <= 0) return false;
  return d * d > b * b * c;
}

BigInt ExactSurd::floor() const { return a + isqrt(b * b * c); }

bool ExactSurd::is_integer() const {
  const BigInt s = b * b * c;
  const BigInt r = isqrt(s);
  return r * r == s;
}

BigInt ExactSurd::ceil() const { return is_integer() ? floor() : floor() + 1; }

std::string ExactSurd::decimal(unsigned digits) const {
  const BigInt scale = ipow(10, digits);
  const BigInt scaled = a * scale + isqrt(b * b * c * scale * scale);
  std::string s = scaled.str();
  const bool neg = scaled < 0;
  if (neg) s.erase(0, 1);
  if (digits == 0) return (neg ? "-" : "") + s;
  if (s.size() <= digits) s.insert(0, digits - s.size() + 1, '0');
  s.insert(s.size() - digits, ".");
  return (neg ? "-" : "") + s;
}

std::string ExactSurd::str() const {
  std::ostringstream os;
  os << a;
  if (b != 0 && c != 0) os << " + " << b << "*sqrt(" << c << ")";
  return os.str();
}

std::int64_t rh_genus(std::int64_t g, std::int64_t N) {
  require(g >= 0 && N >= 1, ErrorKind::Domain, "genus must be >= 0 and degree >= 1");
  return N * (g - 1) + 1;
}

bool BoundReport::satisfied_by(const BigInt& q) const { return threshold.less_than(q); }

BoundReport size_bound(std::int64_t g, std::int64_t N) {
  BoundReport r;
  r.g = g;
  r.N = N;
  r.g_prime = rh_genus(g, N);
  if (r.g_prime <= 1) {
    // Genus 0 or 1 covers always have points; the bound degenerates to 1.
    r.vacuous = true;
    r.threshold = ExactSurd{1, 0, 0};
  } else {
    const BigInt gp(r.g_prime);
    // (g' + sqrt(g'^2 - 1))^2 = (2g'^2 - 1) + 2g' sqrt(g'^2 - 1)
    r.threshold = ExactSurd{2 * gp * gp - 1, 2 * gp, gp * gp - 1};
  }
  r.integer_threshold = r.threshold.ceil();
  return r;
}

bool hasse_weil_has_point(const BigInt& q, std::int64_t g) {
  require(q >= 2, ErrorKind::Domain, "q must be a prime power");
  require(g >= 0, ErrorKind::Domain, "genus must be non-negative");
  const BigInt gg(g);
  return (q + 1) * (q + 1) > 4 * gg * gg * q;
}

BigInt quartic_published_threshold() { return ipow(2, 54) + ipow(2, 28) + 1; }

QuarticThresholdReport quartic_threshold_check(const BigInt& p, std::int64_t br_order_bound) {
  QuarticThresholdReport r;
  r.p = p;
  r.br_order_bound = br_order_bound;
  r.computed = size_bound(3, br_order_bound);
  r.published_threshold = quartic_published_threshold();
  r.difference_ceiling = r.computed.integer_threshold - r.published_threshold;
  r.passes = p > r.published_threshold;
  r.passes_computed = r.computed.satisfied_by(p);
  return r;
}

}  // namespace brauer
