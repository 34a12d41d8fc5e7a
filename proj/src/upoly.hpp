#pragma once

// Dense univariate polynomials over F_p with small p; used to pick field moduli.

#include <cstdint>
#include <vector>

namespace brauer::detail {

using UPoly = std::vector<std::uint64_t>;  // coefficient of x^i at index i, no trailing zeros

void trim(UPoly& f);
UPoly upoly_mulmod(const UPoly& a, const UPoly& b, const UPoly& m, std::uint64_t p);
UPoly upoly_rem(UPoly a, const UPoly& m, std::uint64_t p);
UPoly upoly_sub(const UPoly& a, const UPoly& b, std::uint64_t p);
UPoly upoly_gcd(UPoly a, UPoly b, std::uint64_t p);
/// x^e mod m.
UPoly upoly_xpow(std::uint64_t e, const UPoly& m, std::uint64_t p);
/// Ben-Or irreducibility test for a monic f.
bool upoly_irreducible(const UPoly& f, std::uint64_t p);

}  // namespace brauer::detail
