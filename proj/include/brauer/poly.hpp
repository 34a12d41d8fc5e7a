#pragma once

// Sparse multivariate polynomials over Z (arbitrary precision) or over F_q,
// with weighted-homogeneity support.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "brauer/arith.hpp"
#include "brauer/bigint.hpp"
#include "brauer/error.hpp"

namespace brauer {

struct Variable {
  std::string name;
  int weight = 1;
  bool operator==(const Variable&) const = default;
};

using Monomial = std::vector<std::uint32_t>;

namespace detail {
inline bool coef_is_zero(const BigInt& c) { return c == 0; }
inline bool coef_is_zero(const FqElem& c) { return c.is_zero(); }
inline BigInt coef_times(const BigInt& c, std::int64_t m) { return c * m; }
inline FqElem coef_times(const FqElem& c, std::int64_t m) { return c * m; }
inline BigInt zero_like(const BigInt&) { return 0; }
inline FqElem zero_like(const FqElem& s) { return FqElem::zero(s.field()); }
inline BigInt one_like(const BigInt&) { return 1; }
inline FqElem one_like(const FqElem& s) { return FqElem::one(s.field()); }
}  // namespace detail

template <class Coef>
class MultiPoly {
 public:
  using Terms = std::map<Monomial, Coef>;

  MultiPoly() = default;
  explicit MultiPoly(std::vector<Variable> vars) : vars_(std::move(vars)) {}

  static MultiPoly constant(std::vector<Variable> vars, const Coef& c) {
    MultiPoly f(std::move(vars));
    f.add_term(Monomial(f.arity(), 0), c);
    return f;
  }
  static MultiPoly variable(std::vector<Variable> vars, std::size_t index, const Coef& one) {
    MultiPoly f(std::move(vars));
    Monomial m(f.arity(), 0);
    m.at(index) = 1;
    f.add_term(std::move(m), one);
    return f;
  }

  const std::vector<Variable>& variables() const { return vars_; }
  std::size_t arity() const { return vars_.size(); }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  std::optional<std::size_t> index_of(const std::string& name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (vars_[i].name == name) return i;
    }
    return std::nullopt;
  }

  void add_term(Monomial m, const Coef& c) {
    require(m.size() == arity(), ErrorKind::Domain, "monomial arity mismatch");
    if (detail::coef_is_zero(c)) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(std::move(m), c);
      return;
    }
    it->second = it->second + c;
    if (detail::coef_is_zero(it->second)) terms_.erase(it);
  }

  Coef coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    if (it != terms_.end()) return it->second;
    require(!terms_.empty(), ErrorKind::Domain, "coefficient of the zero polynomial needs a ring sample");
    return detail::zero_like(terms_.begin()->second);
  }

  int weighted_degree(const Monomial& m) const {
    int d = 0;
    for (std::size_t i = 0; i < m.size(); ++i) d += vars_[i].weight * static_cast<int>(m[i]);
    return d;
  }
  static int total_degree(const Monomial& m) {
    int d = 0;
    for (auto e : m) d += static_cast<int>(e);
    return d;
  }
  /// Largest total degree of a term; -1 for the zero polynomial.
  int degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, total_degree(m));
    return d;
  }
  /// Smallest total degree of a term (the order at the origin); -1 for zero.
  int order() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = d < 0 ? total_degree(m) : std::min(d, total_degree(m));
    return d;
  }
  /// The common weighted degree of all terms, if there is one.
  std::optional<int> homogeneous_weighted_degree() const {
    std::optional<int> d;
    for (const auto& [m, c] : terms_) {
      const int w = weighted_degree(m);
      if (d && *d != w) return std::nullopt;
      d = w;
    }
    return d;
  }
  bool is_weighted_homogeneous(int d) const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [&](const auto& t) { return weighted_degree(t.first) == d; });
  }
  /// Terms of total degree exactly d.
  MultiPoly homogeneous_part(int d) const {
    MultiPoly r(vars_);
    for (const auto& [m, c] : terms_) {
      if (total_degree(m) == d) r.terms_.emplace(m, c);
    }
    return r;
  }
  MultiPoly truncated_below(int d) const {
    MultiPoly r(vars_);
    for (const auto& [m, c] : terms_) {
      if (total_degree(m) < d) r.terms_.emplace(m, c);
    }
    return r;
  }

  MultiPoly operator+(const MultiPoly& o) const {
    check_compatible(o);
    MultiPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
  }
  MultiPoly operator-() const {
    MultiPoly r(vars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, detail::coef_times(c, -1));
    return r;
  }
  MultiPoly operator-(const MultiPoly& o) const { return *this + (-o); }
  MultiPoly operator*(const MultiPoly& o) const {
    check_compatible(o);
    MultiPoly r(vars_);
    for (const auto& [m1, c1] : terms_) {
      for (const auto& [m2, c2] : o.terms_) {
        Monomial m(m1.size());
        for (std::size_t i = 0; i < m.size(); ++i) m[i] = m1[i] + m2[i];
        r.add_term(std::move(m), c1 * c2);
      }
    }
    return r;
  }
  MultiPoly scaled(const Coef& s) const {
    MultiPoly r(vars_);
    for (const auto& [m, c] : terms_) r.add_term(m, c * s);
    return r;
  }
  MultiPoly pow(unsigned e) const {
    require(!terms_.empty() || e > 0, ErrorKind::Domain, "0^0 is undefined here");
    if (e == 0) return constant(vars_, detail::one_like(terms_.begin()->second));
    MultiPoly r = *this;
    for (unsigned i = 1; i < e; ++i) r = r * *this;
    return r;
  }
  bool operator==(const MultiPoly& o) const { return vars_ == o.vars_ && terms_ == o.terms_; }

  Coef evaluate(std::span<const Coef> point) const {
    require(point.size() == arity(), ErrorKind::Domain,
            "point has " + std::to_string(point.size()) + " coordinates, polynomial has arity " +
                std::to_string(arity()));
    if (terms_.empty()) {
      require(!point.empty(), ErrorKind::Domain, "cannot evaluate the zero polynomial without a ring sample");
      return detail::zero_like(point[0]);
    }
    std::optional<Coef> acc;
    for (const auto& [m, c] : terms_) {
      Coef t = c;
      for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::uint32_t e = 0; e < m[i]; ++e) t = t * point[i];
      }
      acc = acc ? *acc + t : t;
    }
    return *acc;
  }

  MultiPoly derivative(std::size_t var) const {
    require(var < arity(), ErrorKind::Domain, "derivative index out of range");
    MultiPoly r(vars_);
    for (const auto& [m, c] : terms_) {
      if (m[var] == 0) continue;
      Monomial d = m;
      d[var] -= 1;
      r.add_term(std::move(d), detail::coef_times(c, static_cast<std::int64_t>(m[var])));
    }
    return r;
  }

  /// Substitute images[i] for variable i; images share a common variable list.
  MultiPoly compose(const std::vector<MultiPoly>& images) const {
    require(images.size() == arity(), ErrorKind::Domain, "composition needs one image per variable");
    require(!images.empty(), ErrorKind::Domain, "composition of a constant needs target variables");
    MultiPoly r(images.front().variables());
    std::vector<std::vector<MultiPoly>> powers(arity());
    for (const auto& [m, c] : terms_) {
      MultiPoly t = constant(r.variables(), c);
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        auto& pw = powers[i];
        if (pw.empty()) pw.push_back(constant(r.variables(), detail::one_like(c)));
        while (pw.size() <= m[i]) pw.push_back(pw.back() * images[i]);
        t = t * pw[m[i]];
      }
      r = r + t;
    }
    return r;
  }

  /// Drop variable i, which must not occur in any term.
  MultiPoly without_variable(std::size_t i) const {
    std::vector<Variable> vars = vars_;
    vars.erase(vars.begin() + static_cast<std::ptrdiff_t>(i));
    MultiPoly r(std::move(vars));
    for (const auto& [m, c] : terms_) {
      require(m[i] == 0, ErrorKind::Domain, "variable still occurs");
      Monomial n = m;
      n.erase(n.begin() + static_cast<std::ptrdiff_t>(i));
      r.terms_.emplace(std::move(n), c);
    }
    return r;
  }

  bool uses_variable(std::size_t i) const {
    return std::any_of(terms_.begin(), terms_.end(), [&](const auto& t) { return t.first[i] != 0; });
  }

 private:
  void check_compatible(const MultiPoly& o) const {
    require(vars_ == o.vars_, ErrorKind::Domain, "polynomials over different variable lists");
  }

  std::vector<Variable> vars_;
  Terms terms_;
};

using IntPoly = MultiPoly<BigInt>;
using FqPoly = MultiPoly<FqElem>;

/// Parses sums of products of integers, declared variables, powers and
/// parenthesised subexpressions, e.g. "20*X0^2 + 47*13*X1^2 - (x-y)^2".
IntPoly parse_poly(const std::string& text, const std::vector<Variable>& vars);

/// Canonical text form: terms `coef*x0^e0*...` joined by `+`/`-`, in
/// decreasing monomial order.
std::string to_string(const IntPoly& f);
std::string to_string(const FqPoly& f);

FqPoly reduce_mod(const IntPoly& f, const FiniteField& field);

/// gcd of the coefficients (positive), 0 for the zero polynomial.
BigInt content(const IntPoly& f);
IntPoly divide_exact(const IntPoly& f, const BigInt& d);

template <class Coef>
MultiPoly<Coef> dehomogenize(const MultiPoly<Coef>& f, const std::string& chart_variable) {
  const auto idx = f.index_of(chart_variable);
  require(idx.has_value(), ErrorKind::Domain, "unknown chart variable " + chart_variable);
  require(f.variables()[*idx].weight == 1, ErrorKind::UnsupportedChart,
          "chart variable " + chart_variable + " has weight " +
              std::to_string(f.variables()[*idx].weight));
  std::vector<Variable> vars = f.variables();
  vars.erase(vars.begin() + static_cast<std::ptrdiff_t>(*idx));
  MultiPoly<Coef> r(std::move(vars));
  for (const auto& [m, c] : f.terms()) {
    Monomial n = m;
    n.erase(n.begin() + static_cast<std::ptrdiff_t>(*idx));
    r.add_term(std::move(n), c);
  }
  return r;
}

/// g(t) = f(point + t).
FqPoly shift_to_point(const FqPoly& f, std::span<const FqElem> point);
FqPoly shift_to_point(const FqPoly& f, std::initializer_list<FqElem> point);

template <class Coef>
std::vector<std::vector<MultiPoly<Coef>>> jacobian(std::span<const MultiPoly<Coef>> fs) {
  std::vector<std::vector<MultiPoly<Coef>>> rows;
  for (const auto& f : fs) {
    std::vector<MultiPoly<Coef>> row;
    for (std::size_t j = 0; j < f.arity(); ++j) row.push_back(f.derivative(j));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <class Coef>
std::vector<std::vector<MultiPoly<Coef>>> hessian(const MultiPoly<Coef>& f) {
  std::vector<std::vector<MultiPoly<Coef>>> h(f.arity());
  for (std::size_t i = 0; i < f.arity(); ++i) {
    const auto fi = f.derivative(i);
    for (std::size_t j = 0; j < f.arity(); ++j) h[i].push_back(fi.derivative(j));
  }
  return h;
}

/// Rank of a matrix over a finite field (Gaussian elimination on a copy).
std::size_t matrix_rank(std::vector<std::vector<FqElem>> rows);

/// Evaluates a fixed polynomial over one field using packed arithmetic.
class CompiledPoly {
 public:
  CompiledPoly() = default;
  CompiledPoly(const FqPoly& f, const FiniteField& field);
  CompiledPoly(const IntPoly& f, const FiniteField& field);

  std::uint64_t eval(const std::uint64_t* point) const;
  bool is_zero() const { return terms_.empty(); }

 private:
  struct Term {
    std::uint64_t coef;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> factors;  // (variable, exponent)
  };
  const FiniteField* field_ = nullptr;
  std::vector<Term> terms_;
};

}  // namespace brauer
