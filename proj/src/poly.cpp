#include "brauer/poly.hpp"

#include <cctype>
#include <sstream>

namespace brauer {

namespace {

class Parser {
 public:
  Parser(const std::string& text, const std::vector<Variable>& vars) : s_(text), vars_(vars) {}

  IntPoly parse() {
    IntPoly f = expr();
    skip_space();
    if (pos_ != s_.size()) error("unexpected '" + std::string(1, s_[pos_]) + "'");
    return f;
  }

 private:
  [[noreturn]] void error(const std::string& msg) const {
    fail(ErrorKind::Parse, msg + " at offset " + std::to_string(pos_) + " in '" + s_ + "'");
  }
  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_space();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  IntPoly constant(const BigInt& c) const { return IntPoly::constant(vars_, c); }

  IntPoly expr() {
    IntPoly acc(vars_);
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    IntPoly t = term();
    acc = negate ? acc - t : acc + t;
    while (true) {
      if (accept('+')) acc = acc + term();
      else if (accept('-')) acc = acc - term();
      else break;
    }
    return acc;
  }

  IntPoly term() {
    IntPoly acc = factor();
    while (accept('*')) acc = acc * factor();
    return acc;
  }

  IntPoly factor() {
    if (accept('-')) return -factor();
    IntPoly base = primary();
    if (accept('^')) {
      skip_space();
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) error("expected exponent");
      const unsigned e = static_cast<unsigned>(std::stoul(s_.substr(start, pos_ - start)));
      if (e == 0) return constant(1);
      if (base.is_zero()) return base;
      base = base.pow(e);
    }
    return base;
  }

  IntPoly primary() {
    skip_space();
    if (pos_ >= s_.size()) error("unexpected end of expression");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      IntPoly inner = expr();
      if (!accept(')')) error("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return constant(BigInt(s_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
        ++pos_;
      }
      const std::string name = s_.substr(start, pos_ - start);
      for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (vars_[i].name == name) return IntPoly::variable(vars_, i, BigInt(1));
      }
      error("undeclared variable '" + name + "'");
    }
    error("unexpected '" + std::string(1, c) + "'");
  }

  const std::string& s_;
  const std::vector<Variable>& vars_;
  std::size_t pos_ = 0;
};

std::string monomial_text(const std::vector<Variable>& vars, const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += vars[i].name;
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out;
}

}  // namespace

IntPoly parse_poly(const std::string& text, const std::vector<Variable>& vars) {
  return Parser(text, vars).parse();
}

std::string to_string(const IntPoly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    const bool neg = c < 0;
    const BigInt mag = neg ? BigInt(-c) : c;
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    const std::string mono = monomial_text(f.variables(), m);
    if (mono.empty()) {
      os << mag;
    } else {
      if (mag != 1) os << mag << '*';
      os << mono;
    }
  }
  return os.str();
}

std::string to_string(const FqPoly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    if (!first) os << " + ";
    first = false;
    const std::string mono = monomial_text(f.variables(), m);
    const bool compound = c.field().degree() > 1 && c.str().find('+') != std::string::npos;
    const std::string coef = compound ? "(" + c.str() + ")" : c.str();
    if (mono.empty()) {
      os << coef;
    } else {
      if (!c.is_one()) os << coef << '*';
      os << mono;
    }
  }
  return os.str();
}

FqPoly reduce_mod(const IntPoly& f, const FiniteField& field) {
  FqPoly r(f.variables());
  for (const auto& [m, c] : f.terms()) r.add_term(m, FqElem::from_big(field, c));
  return r;
}

BigInt content(const IntPoly& f) {
  BigInt g = 0;
  for (const auto& [m, c] : f.terms()) g = gcd(g, c < 0 ? BigInt(-c) : c);
  return g;
}

IntPoly divide_exact(const IntPoly& f, const BigInt& d) {
  require(d != 0, ErrorKind::Domain, "division by zero");
  IntPoly r(f.variables());
  for (const auto& [m, c] : f.terms()) {
    require(c % d == 0, ErrorKind::Domain, "inexact polynomial division");
    r.add_term(m, c / d);
  }
  return r;
}

FqPoly shift_to_point(const FqPoly& f, std::span<const FqElem> point) {
  require(point.size() == f.arity(), ErrorKind::Domain, "shift point has wrong arity");
  if (f.arity() == 0 || f.is_zero()) return f;
  const FiniteField& field = point.front().field();
  std::vector<FqPoly> images;
  for (std::size_t i = 0; i < f.arity(); ++i) {
    images.push_back(FqPoly::variable(f.variables(), i, FqElem::one(field)) +
                     FqPoly::constant(f.variables(), point[i]));
  }
  return f.compose(images);
}

FqPoly shift_to_point(const FqPoly& f, std::initializer_list<FqElem> point) {
  return shift_to_point(f, std::span<const FqElem>(point.begin(), point.size()));
}

std::size_t matrix_rank(std::vector<std::vector<FqElem>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    const FqElem inv = rows[rank][c].inverse();
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c].is_zero()) continue;
      const FqElem factor = rows[r][c] * inv;
      for (std::size_t j = c; j < cols; ++j) rows[r][j] = rows[r][j] - factor * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

CompiledPoly::CompiledPoly(const FqPoly& f, const FiniteField& field) : field_(&field) {
  for (const auto& [m, c] : f.terms()) {
    require(c.field() == field, ErrorKind::Domain, "coefficient from a different field");
    Term t{c.packed(), {}};
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i]) t.factors.emplace_back(static_cast<std::uint32_t>(i), m[i]);
    }
    terms_.push_back(std::move(t));
  }
}

CompiledPoly::CompiledPoly(const IntPoly& f, const FiniteField& field)
    : CompiledPoly(reduce_mod(f, field), field) {}

std::uint64_t CompiledPoly::eval(const std::uint64_t* point) const {
  std::uint64_t acc = 0;
  for (const auto& t : terms_) {
    std::uint64_t v = t.coef;
    for (const auto& [var, e] : t.factors) {
      const std::uint64_t x = point[var];
      if (x == 0) {
        v = 0;
        break;
      }
      for (std::uint32_t i = 0; i < e; ++i) v = field_->mul(v, x);
    }
    if (v) acc = field_->add(acc, v);
  }
  return acc;
}

}  // namespace brauer
