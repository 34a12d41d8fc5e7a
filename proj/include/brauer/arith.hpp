#pragma once

// Exact arithmetic in finite fields F_{p^k}, in the invariant group Q/Z, and in
// finite products of cyclic groups.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "brauer/bigint.hpp"

namespace brauer {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m);
std::uint64_t invmod(std::uint64_t a, std::uint64_t m);
bool is_prime(std::uint64_t n);
/// Prime factorisation by trial division; intended for n < 2^40.
std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n);
std::int64_t gcd64(std::int64_t a, std::int64_t b);
std::int64_t lcm64(std::int64_t a, std::int64_t b);

/// The field F_{p^k}, presented as F_p[t]/(m(t)) where m is the least monic
/// irreducible of degree k in the order that compares the coefficient vectors
/// (c_{k-1}, ..., c_0) lexicographically. Elements are packed base-p integers
/// sum c_i p^i, where c_i is the coefficient of t^i.
///
/// Instances are interned: get(p, k) always returns the same object, so
/// elements can hold a plain pointer to their field.
class FiniteField {
 public:
  static constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 40;
  static constexpr std::uint64_t kTableLimit = std::uint64_t{1} << 20;

  static const FiniteField& get(std::uint64_t p, unsigned k = 1);

  std::uint64_t characteristic() const { return p_; }
  unsigned degree() const { return k_; }
  std::uint64_t order() const { return q_; }
  /// Non-leading coefficients c_0..c_{k-1} of the monic modulus.
  const std::vector<std::uint64_t>& modulus() const { return modulus_; }
  /// Least element (by packed value) of multiplicative order q - 1.
  std::uint64_t generator() const { return generator_; }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t neg(std::uint64_t a) const;
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t inv(std::uint64_t a) const;
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
  std::uint64_t from_int(std::int64_t x) const;
  std::uint64_t from_big(const BigInt& x) const;
  std::uint64_t scale(std::uint64_t a, std::uint64_t c) const;  // a * (c mod p)

  std::vector<std::uint64_t> coords(std::uint64_t a) const;
  std::uint64_t pack(std::span<const std::uint64_t> coords) const;

  /// Discrete log to base generator(); a must be nonzero.
  std::uint64_t log(std::uint64_t a) const;

  /// j in [0, n) with a^{(q-1)/n} = zeta^j, zeta = generator()^{(q-1)/n}.
  std::uint64_t character_index(std::uint64_t a, std::uint64_t n) const;
  /// Same, but zeta = g_p^{(p-1)/n} for the least generator g_p of F_p, so the
  /// identification mu_n = Z/n agrees across all extensions of F_p.
  std::uint64_t base_character_index(std::uint64_t a, std::uint64_t n) const;

  bool operator==(const FiniteField& o) const { return this == &o; }

  FiniteField(std::uint64_t p, unsigned k);  // use get()

 private:
  std::uint64_t slow_mul(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t slow_pow(std::uint64_t a, std::uint64_t e) const;
  std::uint64_t multiplicative_order_divides(std::uint64_t a) const;

  std::uint64_t p_;
  unsigned k_;
  std::uint64_t q_;
  std::vector<std::uint64_t> modulus_;
  std::vector<std::uint64_t> pow_p_;  // p^i
  std::uint64_t generator_ = 0;
  std::vector<std::uint32_t> exp_;  // exp_[i] = g^i, size q-1
  std::vector<std::uint32_t> log_;  // log_[a], a != 0
};

/// Element of a finite field; a value type carrying a pointer to its interned field.
class FqElem {
 public:
  FqElem() = default;
  FqElem(const FiniteField& field, std::uint64_t packed) : field_(&field), v_(packed) {}

  static FqElem zero(const FiniteField& f) { return {f, 0}; }
  static FqElem one(const FiniteField& f) { return {f, 1}; }
  static FqElem from_int(const FiniteField& f, std::int64_t x) { return {f, f.from_int(x)}; }
  static FqElem from_big(const FiniteField& f, const BigInt& x) { return {f, f.from_big(x)}; }
  static FqElem from_coords(const FiniteField& f, std::span<const std::uint64_t> c) {
    return {f, f.pack(c)};
  }

  const FiniteField& field() const { return *field_; }
  bool has_field() const { return field_ != nullptr; }
  std::uint64_t packed() const { return v_; }
  std::vector<std::uint64_t> coords() const { return field_->coords(v_); }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  FqElem operator+(const FqElem& o) const { return {*field_, field_->add(v_, o.v_)}; }
  FqElem operator-(const FqElem& o) const { return {*field_, field_->sub(v_, o.v_)}; }
  FqElem operator*(const FqElem& o) const { return {*field_, field_->mul(v_, o.v_)}; }
  FqElem operator/(const FqElem& o) const;
  FqElem operator-() const { return {*field_, field_->neg(v_)}; }
  FqElem operator*(std::int64_t c) const { return *this * from_int(*field_, c); }
  FqElem& operator+=(const FqElem& o) { return *this = *this + o; }
  FqElem& operator-=(const FqElem& o) { return *this = *this - o; }
  FqElem& operator*=(const FqElem& o) { return *this = *this * o; }

  FqElem pow(std::uint64_t e) const { return {*field_, field_->pow(v_, e)}; }
  FqElem inverse() const;
  FqElem frobenius() const { return pow(field_->characteristic()); }
  /// Smallest e such that this element lies in F_{p^e}.
  unsigned field_of_definition() const;

  bool operator==(const FqElem& o) const { return v_ == o.v_ && field_ == o.field_; }
  std::strong_ordering operator<=>(const FqElem& o) const { return v_ <=> o.v_; }

  std::string str() const;

 private:
  const FiniteField* field_ = nullptr;
  std::uint64_t v_ = 0;
};

std::ostream& operator<<(std::ostream& os, const FqElem& x);

/// a/n in Q/Z, kept in lowest terms with 0 <= a < n.
class QZClass {
 public:
  QZClass() = default;
  QZClass(std::int64_t num, std::int64_t den);

  static QZClass zero() { return {}; }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  /// Order in Q/Z; equals the reduced denominator.
  std::int64_t order() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  /// Numerator when written over the denominator n (n must be a multiple of den()).
  std::int64_t over(std::int64_t n) const;

  QZClass operator+(const QZClass& o) const;
  QZClass operator-(const QZClass& o) const;
  QZClass operator-() const { return QZClass(-num_, den_); }
  QZClass operator*(std::int64_t m) const;
  QZClass& operator+=(const QZClass& o) { return *this = *this + o; }

  bool operator==(const QZClass&) const = default;
  /// Orders by value in [0, 1).
  std::strong_ordering operator<=>(const QZClass& o) const;

  std::string str() const;
  /// Parses "a/n" or "0".
  static QZClass parse(const std::string& text);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const QZClass& c);

/// Element of prod_i (1/m_i)Z/Z for declared moduli m_i.
class FinAbElement {
 public:
  FinAbElement() = default;
  FinAbElement(std::vector<std::int64_t> moduli, std::vector<QZClass> entries);

  const std::vector<std::int64_t>& moduli() const { return moduli_; }
  const std::vector<QZClass>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  std::int64_t order() const;

  FinAbElement operator+(const FinAbElement& o) const;
  bool operator==(const FinAbElement&) const = default;

 private:
  std::vector<std::int64_t> moduli_;
  std::vector<QZClass> entries_;
};

/// j/n with x^{(q-1)/n} = g^{j(q-1)/n}, g the least generator of F_q^x.
QZClass power_residue_character(const FqElem& x, std::uint64_t n);
/// Character normalised through the prime field (requires n | p - 1); agrees with
/// power_residue_character over F_p and restricts compatibly to extensions.
QZClass prime_normalized_character(const FqElem& x, std::uint64_t n);

/// Order of the subgroup generated by the elements (closure enumeration).
std::int64_t subgroup_order(std::span<const FinAbElement> elements);
bool is_linearly_independent(std::span<const FinAbElement> elements);

/// Values of one character at each element of an enumerated finite group,
/// with target (1/order)Z/Z.
struct CharacterValues {
  std::int64_t order = 1;
  std::vector<QZClass> values;
};

/// Whether g -> (chi_1(g), ..., chi_r(g)) hits all of prod (1/n_i)Z/Z.
bool product_characters_surjective(std::size_t group_size, std::span<const CharacterValues> chars);

}  // namespace brauer
