#include "upoly.hpp"

#include "brauer/arith.hpp"

namespace brauer::detail {

void trim(UPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

UPoly upoly_rem(UPoly a, const UPoly& m, std::uint64_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint64_t lead_inv = invmod(m.back(), p);
  while (a.size() >= m.size()) {
    const std::uint64_t c = mulmod(a.back(), lead_inv, p);
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = (a[shift + i] + p - mulmod(c, m[i], p)) % p;
    }
    trim(a);
  }
  return a;
}

UPoly upoly_mulmod(const UPoly& a, const UPoly& b, const UPoly& m, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
  }
  return upoly_rem(std::move(r), m, p);
}

UPoly upoly_sub(const UPoly& a, const UPoly& b, std::uint64_t p) {
  UPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + p - b[i]) % p;
  trim(r);
  return r;
}

UPoly upoly_gcd(UPoly a, UPoly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UPoly r = upoly_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

UPoly upoly_xpow(std::uint64_t e, const UPoly& m, std::uint64_t p) {
  UPoly result = upoly_rem(UPoly{1}, m, p);
  UPoly base = upoly_rem(UPoly{0, 1}, m, p);
  while (e) {
    if (e & 1u) result = upoly_mulmod(result, base, m, p);
    base = upoly_mulmod(base, base, m, p);
    e >>= 1;
  }
  return result;
}

bool upoly_irreducible(const UPoly& f, std::uint64_t p) {
  const std::size_t k = f.size() - 1;
  if (k <= 1) return k == 1;
  UPoly xpk = UPoly{0, 1};
  for (std::size_t i = 1; i <= k / 2; ++i) {
    // xpk <- xpk^p mod f, i.e. x^{p^i}
    UPoly acc = upoly_rem(UPoly{1}, f, p);
    UPoly base = xpk;
    std::uint64_t e = p;
    while (e) {
      if (e & 1u) acc = upoly_mulmod(acc, base, f, p);
      base = upoly_mulmod(base, base, f, p);
      e >>= 1;
    }
    xpk = acc;
    UPoly g = upoly_gcd(f, upoly_sub(xpk, UPoly{0, 1}, p), p);
    if (g.size() > 1) return false;
  }
  return true;
}

}  // namespace brauer::detail
