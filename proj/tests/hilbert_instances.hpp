#pragma once

// Random quaternion algebras (a, f) on the conic X0 X1 = X2^2, evaluated at
// rational points (s^2 : t^2 : s t) both through the special fibre and by the
// Hilbert symbol (a, f(P))_p.

#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "brauer/eval.hpp"

namespace brauer::test {

struct OracleRun {
  std::size_t checked = 0;
  std::size_t mismatches = 0;
  std::size_t indeterminate = 0;
  std::size_t ramified = 0;  // points on the horizontal ramification of (a, f)
  std::vector<std::size_t> per_prime;  // checked instances for each prime, in input order
  std::string first_mismatch;
};

inline ModelSpec conic(std::uint64_t p) {
  const AmbientSpace A = AmbientSpace::projective({"X0", "X1", "X2"});
  return ModelSpec::make("conic", A, {parse_poly("X0*X1 - X2^2", A.variables())}, p);
}

inline OracleRun run_hilbert_oracle(const std::vector<std::uint64_t>& primes, std::size_t per_prime,
                                    std::uint64_t seed = 20240607) {
  std::mt19937_64 rng(seed);
  auto uniform = [&](std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
  };
  OracleRun run;
  for (const std::uint64_t p : primes) {
    const ModelSpec M = conic(p);
    const auto& vars = M.ambient.variables();
    const BigInt pp(p);
    auto linear = [&] {
      IntPoly L(vars);
      while (L.is_zero()) {
        for (std::uint32_t i = 0; i < 3; ++i) {
          std::vector<std::uint32_t> e(3, 0);
          e[i] = 1;
          L.add_term(e, BigInt(uniform(-30, 30)));
        }
      }
      return L;
    };
    std::size_t done = 0;
    for (std::size_t attempt = 0; done < per_prime && attempt < 50 * per_prime; ++attempt) {
      std::int64_t u = 0;
      while (u == 0 || u % static_cast<std::int64_t>(p) == 0) u = uniform(-60, 60);
      const BigInt a = BigInt(u) * ipow(pp, static_cast<unsigned>(uniform(0, 3)));
      IntPoly num = linear() * linear();
      if (uniform(0, 2) == 0) num = num.scaled(pp);
      const IntPoly den = uniform(0, 1) ? linear() * linear() : parse_poly("X1^2", vars);
      const SymbolAlgebra alg = SymbolAlgebra::make(2, a, 1, num, den);

      std::int64_t s = 0, t = 0;
      while ((s == 0 && t == 0) || std::gcd(s, t) != 1) {
        s = uniform(-200, 200);
        t = uniform(-200, 200);
      }
      const std::vector<BigInt> X{BigInt(s * s), BigInt(t * t), BigInt(s * t)};
      const BigInt fn = num.evaluate(X), fd = den.evaluate(X);
      if (fn == 0 || fd == 0) continue;

      QZClass got;
      try {
        got = evaluate_algebra(alg, PadicPoint::exact(M, X), M);
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::RamifiedAtPoint) {
          ++run.ramified;
          continue;
        }
        if (e.kind() != ErrorKind::IndeterminateAtPoint) throw;
        ++run.indeterminate;
        continue;
      }
      const QZClass expected = hilbert_symbol(a, 1, fn, fd, p) == 1 ? QZClass::zero() : QZClass(1, 2);
      ++done;
      ++run.checked;
      if (got != expected) {
        if (run.mismatches++ == 0) {
          std::ostringstream os;
          os << "p=" << p << " " << alg.str() << " at (" << s << "^2 : " << t << "^2 : " << s << "*" << t
             << "): got " << got.str() << ", Hilbert symbol gives " << expected.str();
          run.first_mismatch = os.str();
        }
      }
    }
    run.per_prime.push_back(done);
  }
  return run;
}

}  // namespace brauer::test
