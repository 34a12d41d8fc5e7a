#include "brauer/arith.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>

#include "brauer/error.hpp"
#include "upoly.hpp"

namespace brauer {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1u) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t m) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(m), new_r = static_cast<std::int64_t>(a % m);
  while (new_r != 0) {
    const std::int64_t quot = r / new_r;
    std::tie(t, new_t) = std::make_pair(new_t, t - quot * new_t);
    std::tie(r, new_r) = std::make_pair(new_r, r - quot * new_r);
  }
  require(r == 1, ErrorKind::Domain, "element not invertible modulo " + std::to_string(m));
  if (t < 0) t += static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(t);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1u) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, int>> out;
  for (std::uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    if (n % d) continue;
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }
std::int64_t lcm64(std::int64_t a, std::int64_t b) { return std::lcm(a, b); }

// ---------------------------------------------------------------------------
// FiniteField

const FiniteField& FiniteField::get(std::uint64_t p, unsigned k) {
  static std::mutex mu;
  static std::map<std::pair<std::uint64_t, unsigned>, std::unique_ptr<FiniteField>> registry;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = registry[{p, k}];
  if (!slot) slot = std::make_unique<FiniteField>(p, k);
  return *slot;
}

FiniteField::FiniteField(std::uint64_t p, unsigned k) : p_(p), k_(k) {
  require(is_prime(p), ErrorKind::Domain, std::to_string(p) + " is not prime");
  require(k >= 1, ErrorKind::Domain, "extension degree must be positive");
  unsigned __int128 q = 1;
  for (unsigned i = 0; i < k; ++i) {
    pow_p_.push_back(static_cast<std::uint64_t>(q));
    q *= p;
    require(q <= kMaxOrder, ErrorKind::Unsupported,
            "field of order " + std::to_string(p) + "^" + std::to_string(k) + " is too large");
  }
  q_ = static_cast<std::uint64_t>(q);

  // Least monic irreducible: scan packed coefficient vectors in increasing order.
  for (std::uint64_t v = 0; v < q_; ++v) {
    detail::UPoly f(k + 1, 0);
    for (unsigned i = 0; i < k; ++i) f[i] = (v / pow_p_[i]) % p;
    f[k] = 1;
    if (detail::upoly_irreducible(f, p)) {
      modulus_.assign(f.begin(), f.begin() + k);
      break;
    }
  }

  const auto factors = factorize(q_ - 1);
  auto is_generator = [&](std::uint64_t a) {
    if (slow_pow(a, q_ - 1) != 1) return false;
    for (const auto& [r, e] : factors) {
      if (slow_pow(a, (q_ - 1) / r) == 1) return false;
    }
    return true;
  };
  for (std::uint64_t a = 1; a < q_; ++a) {
    if (is_generator(a)) {
      generator_ = a;
      break;
    }
  }
  if (q_ == 2) generator_ = 1;

  if (q_ <= kTableLimit) {
    exp_.resize(q_ - 1);
    log_.assign(q_, 0);
    std::uint64_t x = 1;
    for (std::uint64_t i = 0; i + 1 < q_; ++i) {
      exp_[i] = static_cast<std::uint32_t>(x);
      log_[x] = static_cast<std::uint32_t>(i);
      x = slow_mul(x, generator_);
    }
  }
}

std::uint64_t FiniteField::add(std::uint64_t a, std::uint64_t b) const {
  if (k_ == 1) {
    const std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint64_t r = 0;
  for (unsigned i = 0; i < k_; ++i) {
    const std::uint64_t da = a % p_, db = b % p_;
    a /= p_;
    b /= p_;
    std::uint64_t s = da + db;
    if (s >= p_) s -= p_;
    r += s * pow_p_[i];
  }
  return r;
}

std::uint64_t FiniteField::neg(std::uint64_t a) const {
  if (k_ == 1) return a == 0 ? 0 : p_ - a;
  std::uint64_t r = 0;
  for (unsigned i = 0; i < k_; ++i) {
    const std::uint64_t d = a % p_;
    a /= p_;
    r += (d == 0 ? 0 : p_ - d) * pow_p_[i];
  }
  return r;
}

std::uint64_t FiniteField::sub(std::uint64_t a, std::uint64_t b) const { return add(a, neg(b)); }

std::uint64_t FiniteField::slow_mul(std::uint64_t a, std::uint64_t b) const {
  if (k_ == 1) return mulmod(a, b, p_);
  std::vector<std::uint64_t> ca = coords(a), cb = coords(b);
  std::vector<std::uint64_t> prod(2 * k_ - 1, 0);
  for (unsigned i = 0; i < k_; ++i) {
    if (ca[i] == 0) continue;
    for (unsigned j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + mulmod(ca[i], cb[j], p_)) % p_;
  }
  // reduce with t^k = -sum c_i t^i
  for (std::size_t d = prod.size() - 1; d >= k_; --d) {
    const std::uint64_t c = prod[d];
    if (c == 0) continue;
    prod[d] = 0;
    for (unsigned i = 0; i < k_; ++i) {
      prod[d - k_ + i] = (prod[d - k_ + i] + p_ - mulmod(c, modulus_[i], p_)) % p_;
    }
  }
  prod.resize(k_);
  return pack(prod);
}

std::uint64_t FiniteField::slow_pow(std::uint64_t a, std::uint64_t e) const {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1u) r = slow_mul(r, a);
    a = slow_mul(a, a);
    e >>= 1;
  }
  return r;
}

std::uint64_t FiniteField::mul(std::uint64_t a, std::uint64_t b) const {
  if (k_ == 1) return p_ < (std::uint64_t{1} << 32) ? a * b % p_ : mulmod(a, b, p_);
  if (a == 0 || b == 0) return 0;
  if (!exp_.empty()) {
    std::uint64_t idx = std::uint64_t{log_[a]} + log_[b];
    if (idx >= q_ - 1) idx -= q_ - 1;
    return exp_[idx];
  }
  return slow_mul(a, b);
}

std::uint64_t FiniteField::pow(std::uint64_t a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  if (!exp_.empty()) {
    const std::uint64_t idx = static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(log_[a]) * (e % (q_ - 1)) % (q_ - 1));
    return exp_[idx];
  }
  if (k_ == 1) return powmod(a, e, p_);
  return slow_pow(a, e);
}

std::uint64_t FiniteField::inv(std::uint64_t a) const {
  require(a != 0, ErrorKind::Domain, "division by zero in F_" + std::to_string(q_));
  if (!exp_.empty()) return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
  if (k_ == 1) return invmod(a, p_);
  return slow_pow(a, q_ - 2);
}

std::uint64_t FiniteField::from_int(std::int64_t x) const {
  std::int64_t r = x % static_cast<std::int64_t>(p_);
  if (r < 0) r += static_cast<std::int64_t>(p_);
  return static_cast<std::uint64_t>(r);
}

std::uint64_t FiniteField::from_big(const BigInt& x) const { return mod_u64(x, p_); }

std::uint64_t FiniteField::scale(std::uint64_t a, std::uint64_t c) const {
  return mul(a, c % p_);
}

std::vector<std::uint64_t> FiniteField::coords(std::uint64_t a) const {
  std::vector<std::uint64_t> c(k_);
  for (unsigned i = 0; i < k_; ++i) {
    c[i] = a % p_;
    a /= p_;
  }
  return c;
}

std::uint64_t FiniteField::pack(std::span<const std::uint64_t> c) const {
  require(c.size() == k_, ErrorKind::Domain, "coordinate vector has wrong length");
  std::uint64_t v = 0;
  for (unsigned i = 0; i < k_; ++i) v += (c[i] % p_) * pow_p_[i];
  return v;
}

std::uint64_t FiniteField::log(std::uint64_t a) const {
  require(a != 0, ErrorKind::Domain, "logarithm of zero");
  require(!exp_.empty(), ErrorKind::Unsupported, "discrete log tables not available for this field");
  return log_[a];
}

std::uint64_t FiniteField::character_index(std::uint64_t a, std::uint64_t n) const {
  require(n >= 1 && (q_ - 1) % n == 0, ErrorKind::UnsupportedCharacter,
          std::to_string(n) + " does not divide " + std::to_string(q_) + " - 1");
  require(a != 0, ErrorKind::Domain, "character of zero");
  if (!exp_.empty()) return log_[a] % n;
  const std::uint64_t e = (q_ - 1) / n;
  const std::uint64_t y = pow(a, e);
  const std::uint64_t zeta = pow(generator_, e);
  std::uint64_t z = 1;
  for (std::uint64_t j = 0; j < n; ++j) {
    if (z == y) return j;
    z = mul(z, zeta);
  }
  fail(ErrorKind::Domain, "character value outside mu_n");
}

std::uint64_t FiniteField::base_character_index(std::uint64_t a, std::uint64_t n) const {
  require(n >= 1 && (p_ - 1) % n == 0, ErrorKind::UnsupportedCharacter,
          std::to_string(n) + " does not divide " + std::to_string(p_) + " - 1");
  if (k_ == 1) return character_index(a, n);
  require(a != 0, ErrorKind::Domain, "character of zero");
  const FiniteField& base = get(p_, 1);
  // zeta_1 as an element of this field has packed value equal to its F_p value.
  const std::uint64_t zeta1 = base.pow(base.generator(), (p_ - 1) / n);
  if (!exp_.empty()) {
    // log(zeta1) = s * (q-1)/n; then zeta_k^j = zeta1^{j / s}.
    const std::uint64_t s = (log_[zeta1] / ((q_ - 1) / n)) % n;
    return mulmod(log_[a] % n, invmod(s, n), n);
  }
  const std::uint64_t y = pow(a, (q_ - 1) / n);
  std::uint64_t z = 1;
  for (std::uint64_t j = 0; j < n; ++j) {
    if (z == y) return j;
    z = mul(z, zeta1);
  }
  fail(ErrorKind::Domain, "character value outside mu_n");
}

// ---------------------------------------------------------------------------
// FqElem

FqElem FqElem::operator/(const FqElem& o) const { return {*field_, field_->mul(v_, field_->inv(o.v_))}; }

FqElem FqElem::inverse() const { return {*field_, field_->inv(v_)}; }

unsigned FqElem::field_of_definition() const {
  const unsigned k = field_->degree();
  for (unsigned e = 1; e <= k; ++e) {
    if (k % e) continue;
    FqElem y = *this;
    for (unsigned i = 0; i < e; ++i) y = y.frobenius();
    if (y == *this) return e;
  }
  return k;
}

std::string FqElem::str() const {
  if (!field_) return "<none>";
  if (field_->degree() == 1) return std::to_string(v_);
  const auto c = coords();
  std::ostringstream os;
  bool first = true;
  for (unsigned i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    if (!first) os << '+';
    first = false;
    if (i == 0) {
      os << c[i];
    } else {
      if (c[i] != 1) os << c[i] << '*';
      os << 't';
      if (i > 1) os << '^' << i;
    }
  }
  if (first) os << '0';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const FqElem& x) { return os << x.str(); }

// ---------------------------------------------------------------------------
// QZClass

QZClass::QZClass(std::int64_t num, std::int64_t den) {
  require(den > 0, ErrorKind::Domain, "Q/Z class needs a positive denominator");
  num %= den;
  if (num < 0) num += den;
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
  if (num_ == 0) den_ = 1;
}

std::int64_t QZClass::over(std::int64_t n) const {
  require(n % den_ == 0, ErrorKind::Domain,
          "class " + str() + " does not lie in (1/" + std::to_string(n) + ")Z/Z");
  return num_ * (n / den_);
}

QZClass QZClass::operator+(const QZClass& o) const {
  const std::int64_t l = std::lcm(den_, o.den_);
  return QZClass(num_ * (l / den_) + o.num_ * (l / o.den_), l);
}

QZClass QZClass::operator-(const QZClass& o) const { return *this + (-o); }

QZClass QZClass::operator*(std::int64_t m) const {
  const std::int64_t r = static_cast<std::int64_t>(static_cast<__int128>(num_) * m % den_);
  return QZClass(r, den_);
}

std::strong_ordering QZClass::operator<=>(const QZClass& o) const {
  const __int128 lhs = static_cast<__int128>(num_) * o.den_;
  const __int128 rhs = static_cast<__int128>(o.num_) * den_;
  if (lhs != rhs) return lhs < rhs ? std::strong_ordering::less : std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string QZClass::str() const {
  if (num_ == 0) return "0";
  return std::to_string(num_) + "/" + std::to_string(den_);
}

QZClass QZClass::parse(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return QZClass(std::stoll(text), 1);
    return QZClass(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
  } catch (const std::logic_error&) {
    fail(ErrorKind::Parse, "bad Q/Z class '" + text + "'");
  }
}

std::ostream& operator<<(std::ostream& os, const QZClass& c) { return os << c.str(); }

// ---------------------------------------------------------------------------
// FinAbElement

FinAbElement::FinAbElement(std::vector<std::int64_t> moduli, std::vector<QZClass> entries)
    : moduli_(std::move(moduli)), entries_(std::move(entries)) {
  require(moduli_.size() == entries_.size(), ErrorKind::Domain, "entry count does not match moduli");
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    require(moduli_[i] >= 1, ErrorKind::Domain, "moduli must be positive");
    entries_[i].over(moduli_[i]);
  }
}

std::int64_t FinAbElement::order() const {
  std::int64_t o = 1;
  for (const auto& e : entries_) o = std::lcm(o, e.order());
  return o;
}

FinAbElement FinAbElement::operator+(const FinAbElement& o) const {
  require(moduli_ == o.moduli_, ErrorKind::Domain, "elements of different groups");
  std::vector<QZClass> sum(entries_.size());
  for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = entries_[i] + o.entries_[i];
  return FinAbElement(moduli_, std::move(sum));
}

// ---------------------------------------------------------------------------
// Characters and subgroup structure

QZClass power_residue_character(const FqElem& x, std::uint64_t n) {
  require(x.has_field(), ErrorKind::Domain, "element without a field");
  const std::uint64_t j = x.field().character_index(x.packed(), n);
  return QZClass(static_cast<std::int64_t>(j), static_cast<std::int64_t>(n));
}

QZClass prime_normalized_character(const FqElem& x, std::uint64_t n) {
  require(x.has_field(), ErrorKind::Domain, "element without a field");
  const std::uint64_t j = x.field().base_character_index(x.packed(), n);
  return QZClass(static_cast<std::int64_t>(j), static_cast<std::int64_t>(n));
}

namespace {

constexpr std::int64_t kMaxEnumeratedGroup = std::int64_t{1} << 24;

std::int64_t ambient_size(const std::vector<std::int64_t>& moduli) {
  std::int64_t size = 1;
  for (auto m : moduli) {
    size *= m;
    require(size <= kMaxEnumeratedGroup, ErrorKind::BudgetExceeded, "ambient group too large to enumerate");
  }
  return size;
}

}  // namespace

std::int64_t subgroup_order(std::span<const FinAbElement> elements) {
  if (elements.empty()) return 1;
  const auto& moduli = elements.front().moduli();
  for (const auto& e : elements) {
    require(e.moduli() == moduli, ErrorKind::Domain, "elements live in different ambient groups");
  }
  const std::int64_t size = ambient_size(moduli);
  const std::size_t r = moduli.size();

  // mixed-radix encoding of residue vectors
  auto encode = [&](const std::vector<std::int64_t>& v) {
    std::int64_t code = 0;
    for (std::size_t i = 0; i < r; ++i) code = code * moduli[i] + v[i];
    return code;
  };
  std::vector<std::vector<std::int64_t>> gens;
  for (const auto& e : elements) {
    std::vector<std::int64_t> v(r);
    for (std::size_t i = 0; i < r; ++i) v[i] = e.entries()[i].over(moduli[i]);
    gens.push_back(std::move(v));
  }

  std::vector<bool> seen(static_cast<std::size_t>(size), false);
  std::vector<std::vector<std::int64_t>> frontier{std::vector<std::int64_t>(r, 0)};
  seen[0] = true;
  std::int64_t count = 1;
  while (!frontier.empty()) {
    std::vector<std::vector<std::int64_t>> next;
    for (const auto& v : frontier) {
      for (const auto& g : gens) {
        std::vector<std::int64_t> w(r);
        for (std::size_t i = 0; i < r; ++i) w[i] = (v[i] + g[i]) % moduli[i];
        const auto code = static_cast<std::size_t>(encode(w));
        if (!seen[code]) {
          seen[code] = true;
          ++count;
          next.push_back(std::move(w));
        }
      }
    }
    frontier = std::move(next);
  }
  return count;
}

bool is_linearly_independent(std::span<const FinAbElement> elements) {
  std::int64_t product = 1;
  for (const auto& e : elements) product *= e.order();
  return subgroup_order(elements) == product;
}

bool product_characters_surjective(std::size_t group_size, std::span<const CharacterValues> chars) {
  require(group_size > 0, ErrorKind::Domain, "characters on an empty group");
  std::vector<std::int64_t> targets;
  for (const auto& c : chars) {
    require(c.values.size() == group_size, ErrorKind::Domain, "character table has wrong length");
    require(c.order >= 1, ErrorKind::Domain, "character order must be positive");
    targets.push_back(c.order);
  }
  const std::int64_t size = ambient_size(targets);
  if (static_cast<std::int64_t>(group_size) < size) return false;
  std::vector<bool> hit(static_cast<std::size_t>(size), false);
  std::int64_t count = 0;
  for (std::size_t g = 0; g < group_size; ++g) {
    std::int64_t code = 0;
    for (std::size_t i = 0; i < chars.size(); ++i) code = code * targets[i] + chars[i].values[g].over(targets[i]);
    if (!hit[static_cast<std::size_t>(code)]) {
      hit[static_cast<std::size_t>(code)] = true;
      ++count;
    }
  }
  return count == size;
}

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Domain: return "DomainError";
    case ErrorKind::UnsupportedCharacter: return "UnsupportedCharacter";
    case ErrorKind::UnsupportedChart: return "UnsupportedChart";
    case ErrorKind::UnsupportedCharacteristic: return "UnsupportedCharacteristic";
    case ErrorKind::Unsupported: return "Unsupported";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::NonIsolated: return "NonIsolated";
    case ErrorKind::NotADE: return "NotADE";
    case ErrorKind::TableMiss: return "TableMiss";
    case ErrorKind::DegenerateResidue: return "DegenerateResidue";
    case ErrorKind::IndeterminateAtPoint: return "IndeterminateAtPoint";
    case ErrorKind::RamifiedAtPoint: return "RamifiedAtPoint";
    case ErrorKind::SingularReduction: return "SingularReduction";
    case ErrorKind::Cache: return "CacheError";
    case ErrorKind::Component: return "ComponentError";
    case ErrorKind::Empty: return "Empty";
    case ErrorKind::Parse: return "ParseError";
  }
  return "Error";
}

}  // namespace brauer
