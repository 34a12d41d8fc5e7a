#include <gtest/gtest.h>

#include <random>
#include <set>

#include "brauer/arith.hpp"
#include "test_util.hpp"

using namespace brauer;

namespace {

// Schoolbook product of coefficient vectors reduced by the monic modulus;
// independent of the library's multiplication tables.
std::vector<std::uint64_t> naive_mul(const FiniteField& F, const std::vector<std::uint64_t>& a,
                                     const std::vector<std::uint64_t>& b) {
  const std::uint64_t p = F.characteristic();
  const unsigned k = F.degree();
  std::vector<std::uint64_t> prod(2 * k, 0);
  for (unsigned i = 0; i < k; ++i) {
    for (unsigned j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  }
  const auto& m = F.modulus();
  for (unsigned d = 2 * k - 1; d >= k; --d) {
    const std::uint64_t c = prod[d];
    if (c == 0) continue;
    prod[d] = 0;
    for (unsigned i = 0; i < k; ++i) prod[d - k + i] = (prod[d - k + i] + (p - c) * m[i]) % p;
  }
  prod.resize(k);
  return prod;
}

std::vector<std::uint64_t> prime_powers_up_to(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p <= limit; ++p) {
    if (!is_prime(p)) continue;
    for (std::uint64_t q = p; q <= limit; q *= p) out.push_back(q);
  }
  return out;
}

}  // namespace

TEST(Integers, PrimalityMatchesTrialDivision) {
  for (std::uint64_t n = 0; n < 5000; ++n) {
    bool prime = n >= 2;
    for (std::uint64_t d = 2; d * d <= n && prime; ++d) prime = n % d != 0;
    EXPECT_EQ(is_prime(n), prime) << n;
  }
  EXPECT_TRUE(is_prime(1000000007));
  EXPECT_FALSE(is_prime(std::uint64_t{1000000007} * 3));
}

TEST(Integers, FactorisationMultipliesBack) {
  for (std::uint64_t n : {1ull, 2ull, 12ull, 82297ull, 97ull * 97ull * 101ull, (1ull << 25)}) {
    std::uint64_t prod = 1;
    for (const auto& [q, e] : factorize(n)) {
      EXPECT_TRUE(is_prime(q));
      for (int i = 0; i < e; ++i) prod *= q;
    }
    EXPECT_EQ(prod, n);
  }
  EXPECT_EQ(factorize(82297), (std::vector<std::pair<std::uint64_t, int>>{{17, 1}, {47, 1}, {103, 1}}));
}

TEST(Integers, ModularInverse) {
  for (std::uint64_t a = 1; a < 101; ++a) EXPECT_EQ(mulmod(a, invmod(a, 101), 101), 1u);
  EXPECT_THROW(invmod(6, 9), Error);
}

TEST(FiniteField, InterningGivesOneObject) {
  EXPECT_EQ(&FiniteField::get(17, 2), &FiniteField::get(17, 2));
  EXPECT_NE(&FiniteField::get(17, 1), &FiniteField::get(17, 2));
  EXPECT_THROW(FiniteField::get(15, 1), Error);
}

TEST(FiniteField, MultiplicationMatchesSchoolbookOracle) {
  for (auto [p, k] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 4}, {3, 3}, {5, 2}, {7, 3}, {17, 2}, {11, 2}}) {
    const FiniteField& F = FiniteField::get(p, k);
    for (std::uint64_t a = 0; a < F.order(); a += 1 + F.order() / 60) {
      for (std::uint64_t b = 0; b < F.order(); ++b) {
        ASSERT_EQ(F.coords(F.mul(a, b)), naive_mul(F, F.coords(a), F.coords(b))) << p << "^" << k;
      }
    }
  }
}

TEST(FiniteField, GeneratorHasFullOrder) {
  for (auto [p, k] : std::vector<std::pair<std::uint64_t, unsigned>>{{5, 1}, {17, 1}, {3, 4}, {17, 2}, {11, 2}, {7, 3}}) {
    const FiniteField& F = FiniteField::get(p, k);
    std::uint64_t x = 1, order = 0;
    do {
      x = F.mul(x, F.generator());
      ++order;
    } while (x != 1);
    EXPECT_EQ(order, F.order() - 1);
  }
}

TEST(FiniteField, InverseAndLog) {
  const FiniteField& F = FiniteField::get(13, 2);
  for (std::uint64_t a = 1; a < F.order(); ++a) {
    EXPECT_EQ(F.mul(a, F.inv(a)), 1u);
    EXPECT_EQ(F.pow(F.generator(), F.log(a)), a);
  }
}

TEST(FiniteField, FrobeniusAndFieldOfDefinition) {
  const FiniteField& F = FiniteField::get(5, 4);
  std::map<unsigned, std::uint64_t> by_degree;
  for (std::uint64_t a = 0; a < F.order(); ++a) {
    const FqElem x(F, a);
    EXPECT_EQ(x.pow(F.order()), x);
    ++by_degree[x.field_of_definition()];
  }
  // F_625 = F_5 + (F_25 \ F_5) + (elements of degree 4)
  EXPECT_EQ(by_degree[1], 5u);
  EXPECT_EQ(by_degree[2], 20u);
  EXPECT_EQ(by_degree[4], 600u);
}

TEST(FiniteField, PrimeFieldElementsKeepTheirValue) {
  const FiniteField& F = FiniteField::get(17, 1);
  const FiniteField& E = FiniteField::get(17, 3);
  for (std::uint64_t a = 0; a < 17; ++a) {
    for (std::uint64_t b = 0; b < 17; ++b) EXPECT_EQ(E.mul(a, b), F.mul(a, b));
  }
  EXPECT_EQ(FqElem::from_int(F, -1).packed(), 16u);
  EXPECT_EQ(FqElem::from_big(F, BigInt(-82297)).packed(), 0u);
}

// Exhaustive multiplicativity and kernel checks for the n-th power residue
// character on every F_q with q <= 2000 and every prime n <= 7 dividing q - 1.
// Multiplicativity on all pairs is equivalent to chi(g^i) = i chi(g) along a
// generator walk that visits every unit; small fields also check all pairs.
TEST(Characters, MultiplicativeWithNthPowerKernel) {
  std::size_t fields = 0;
  for (std::uint64_t q : prime_powers_up_to(2000)) {
    std::uint64_t p = 2;
    while (q % p != 0) ++p;
    unsigned k = 0;
    for (std::uint64_t t = q; t > 1; t /= p) ++k;
    const FiniteField& F = FiniteField::get(p, k);
    for (const auto& [n, e] : factorize(q - 1)) {
      if (n > 7) continue;
      ++fields;
      std::vector<QZClass> chi(q);
      std::set<std::uint64_t> powers;
      for (std::uint64_t a = 1; a < q; ++a) {
        chi[a] = power_residue_character(FqElem(F, a), n);
        powers.insert(F.pow(a, n));
      }
      for (std::uint64_t a = 1; a < q; ++a) {
        ASSERT_EQ(chi[a].is_zero(), powers.count(a) == 1) << "q=" << q << " n=" << n << " a=" << a;
        ASSERT_EQ(chi[a] * static_cast<std::int64_t>(n), QZClass::zero());
      }
      std::set<std::uint64_t> visited;
      std::uint64_t x = 1;
      for (std::uint64_t i = 0; i + 1 < q; ++i) {
        ASSERT_EQ(chi[x], chi[F.generator()] * static_cast<std::int64_t>(i)) << "q=" << q << " n=" << n;
        visited.insert(x);
        x = F.mul(x, F.generator());
      }
      ASSERT_EQ(visited.size(), q - 1);
      if (q > 400) continue;
      for (std::uint64_t a = 1; a < q; ++a) {
        for (std::uint64_t b = 1; b < q; ++b) {
          ASSERT_EQ(chi[F.mul(a, b)], chi[a] + chi[b]) << "q=" << q << " n=" << n;
        }
      }
    }
  }
  EXPECT_GT(fields, 300u);
}

TEST(Characters, PrimeNormalisedCharacterRestrictsCompatibly) {
  for (std::uint64_t p : {5ull, 13ull, 17ull}) {
    const FiniteField& F = FiniteField::get(p, 1);
    for (unsigned k = 1; k <= 3; ++k) {
      const FiniteField& E = FiniteField::get(p, k);
      for (std::uint64_t a = 1; a < p; ++a) {
        EXPECT_EQ(prime_normalized_character(FqElem(E, a), 2), prime_normalized_character(FqElem(F, a), 2) * static_cast<std::int64_t>(k))
            << "restriction of the quadratic character to F_p is k times the base character";
      }
      // multiplicativity on the extension
      for (std::uint64_t a = 1; a < E.order(); a += 3) {
        const FqElem x(E, a), y(E, 1 + (a * 7) % (E.order() - 1));
        EXPECT_EQ(prime_normalized_character(x * y, 4), prime_normalized_character(x, 4) + prime_normalized_character(y, 4));
      }
    }
  }
}

TEST(Characters, QuadraticCharacterIsLegendreSymbol) {
  const FiniteField& F = FiniteField::get(29, 1);
  for (std::uint64_t a = 1; a < 29; ++a) {
    bool square = false;
    for (std::uint64_t y = 1; y < 29; ++y) square = square || (y * y) % 29 == a;
    EXPECT_EQ(power_residue_character(FqElem(F, a), 2), square ? QZClass::zero() : QZClass(1, 2));
  }
}

TEST(QZ, ArithmeticAndParsing) {
  EXPECT_EQ(QZClass(1, 2) + QZClass(1, 2), QZClass::zero());
  EXPECT_EQ(QZClass(2, 6), QZClass(1, 3));
  EXPECT_EQ(QZClass(-1, 5), QZClass(4, 5));
  EXPECT_EQ(QZClass(1, 3).order(), 3);
  EXPECT_EQ(QZClass(1, 3).over(6), 2);
  EXPECT_EQ(QZClass::parse("3/4"), QZClass(3, 4));
  EXPECT_EQ(QZClass::parse("0"), QZClass::zero());
  EXPECT_EQ(QZClass(1, 2).str(), "1/2");
  EXPECT_LT(QZClass(1, 3), QZClass(1, 2));
  EXPECT_THROW(QZClass(1, 4).over(6), Error);
}

TEST(FinAb, SubgroupOrders) {
  const std::vector<std::int64_t> m{2, 4};
  const FinAbElement a(m, {QZClass(1, 2), QZClass::zero()});
  const FinAbElement b(m, {QZClass::zero(), QZClass(1, 4)});
  const FinAbElement c(m, {QZClass(1, 2), QZClass(1, 2)});
  std::vector<FinAbElement> ab{a, b}, bc{b, c};
  EXPECT_EQ(subgroup_order(ab), 8);
  EXPECT_TRUE(is_linearly_independent(ab));
  EXPECT_EQ(subgroup_order(bc), 8);
  std::vector<FinAbElement> cb2{c, b + b};
  EXPECT_EQ(subgroup_order(cb2), 4);
}

// For characters chi_1..chi_r of a finite abelian group G, the chi_i are
// independent in the dual group exactly when g -> (chi_i(g)) is onto
// prod (1/ord chi_i)Z/Z. Checked on every abelian group of order <= 64.
TEST(FinAb, IndependenceIffJointCharacterSurjective) {
  std::mt19937_64 rng(20261016);
  std::size_t groups = 0, checks = 0, independent = 0;
  for (std::int64_t order = 1; order <= 64; ++order) {
    for (const auto& m : test::abelian_groups(order)) {
      ++groups;
      // Enumerate G = prod Z/m_j in mixed radix.
      std::vector<std::vector<std::int64_t>> G;
      for (std::int64_t code = 0; code < order; ++code) {
        std::vector<std::int64_t> g(m.size());
        std::int64_t c = code;
        for (std::size_t j = m.size(); j-- > 0;) {
          g[j] = c % m[j];
          c /= m[j];
        }
        G.push_back(g);
      }
      auto random_char = [&] {
        std::vector<QZClass> e;
        for (auto mj : m) e.emplace_back(static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(mj)), mj);
        return FinAbElement(m, e);
      };
      const int trials = m.empty() ? 1 : 40;
      for (int t = 0; t < trials; ++t) {
        const std::size_t r = 1 + rng() % 3;
        std::vector<FinAbElement> chars;
        for (std::size_t i = 0; i < r; ++i) chars.push_back(m.empty() ? FinAbElement() : random_char());
        std::vector<CharacterValues> tables;
        for (const auto& chi : chars) {
          CharacterValues cv;
          cv.order = chi.order();
          for (const auto& g : G) {
            QZClass v;
            for (std::size_t j = 0; j < m.size(); ++j) v += chi.entries()[j] * g[j];
            cv.values.push_back(v);
          }
          tables.push_back(std::move(cv));
        }
        const bool ind = is_linearly_independent(chars);
        independent += ind;
        ++checks;
        ASSERT_EQ(ind, product_characters_surjective(G.size(), tables)) << "group order " << order;
      }
    }
  }
  EXPECT_EQ(groups, 117u);  // number of abelian groups of order 1..64
  EXPECT_GT(independent, 0u);
  EXPECT_LT(independent, checks);
}
