#include "brauer/sing.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "brauer/default_table.hpp"
#include "brauer/local_algebra.hpp"

namespace brauer {

// ---------------------------------------------------------------------------
// ADE types and labels

AdeType AdeType::make(char family, int index) {
  const bool ok = (family == 'A' && index >= 1) || (family == 'D' && index >= 4) ||
                  (family == 'E' && index >= 6 && index <= 8);
  require(ok, ErrorKind::Domain, std::string("not an ADE type: ") + family + std::to_string(index));
  return AdeType{family, index};
}

AdeType AdeType::parse(const std::string& label) {
  require(label.size() >= 2 && std::all_of(label.begin() + 1, label.end(), ::isdigit), ErrorKind::Parse,
          "bad ADE label '" + label + "'");
  return make(static_cast<char>(std::toupper(static_cast<unsigned char>(label[0]))), std::stoi(label.substr(1)));
}

std::string SingularityType::label_of(std::vector<AdeType> types) {
  std::sort(types.begin(), types.end());
  std::string out;
  for (std::size_t i = 0; i < types.size();) {
    std::size_t j = i;
    while (j < types.size() && types[j] == types[i]) ++j;
    if (!out.empty()) out += '+';
    if (j - i > 1) out += std::to_string(j - i);
    out += types[i].label();
    i = j;
  }
  return out;
}

std::string SingularityType::label() const {
  std::vector<AdeType> types;
  for (const auto& p : points) types.push_back(p.type);
  return label_of(std::move(types));
}

std::string SingularityType::canonical_label(const std::string& text) {
  std::vector<AdeType> types;
  std::string cleaned;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) cleaned += c;
  }
  std::istringstream parts(cleaned);
  std::string part;
  while (std::getline(parts, part, '+')) {
    std::size_t pos = 0;
    while (pos < part.size() && std::isdigit(static_cast<unsigned char>(part[pos]))) ++pos;
    const int count = pos ? std::stoi(part.substr(0, pos)) : 1;
    require(count >= 1, ErrorKind::Parse, "bad multiplicity in '" + text + "'");
    const AdeType t = AdeType::parse(part.substr(pos));
    for (int i = 0; i < count; ++i) types.push_back(t);
  }
  require(!types.empty(), ErrorKind::Parse, "empty singularity type");
  return label_of(std::move(types));
}

// ---------------------------------------------------------------------------
// Classification

namespace {

using Matrix = std::vector<std::vector<FqElem>>;

Matrix quadratic_form_matrix(const FqPoly& f, const FiniteField& F) {
  const std::size_t n = f.arity();
  Matrix h(n, std::vector<FqElem>(n, FqElem::zero(F)));
  for (const auto& [m, c] : f.terms()) {
    if (FqPoly::total_degree(m) != 2) continue;
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::uint32_t e = 0; e < m[i]; ++e) idx.push_back(i);
    }
    if (idx[0] == idx[1]) {
      h[idx[0]][idx[0]] = c * 2;
    } else {
      h[idx[0]][idx[1]] = c;
      h[idx[1]][idx[0]] = c;
    }
  }
  return h;
}

// Basis of the right kernel of a square matrix.
std::vector<std::vector<FqElem>> kernel_basis(Matrix a, const FiniteField& F) {
  const std::size_t rows = a.size(), cols = a.empty() ? 0 : a[0].size();
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    const FqElem inv = a[r][c].inverse();
    for (auto& x : a[r]) x = x * inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      const FqElem factor = a[i][c];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] = a[i][j] - factor * a[r][j];
    }
    pivot_cols.push_back(c);
    ++r;
  }
  std::vector<std::vector<FqElem>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (std::find(pivot_cols.begin(), pivot_cols.end(), free) != pivot_cols.end()) continue;
    std::vector<FqElem> v(cols, FqElem::zero(F));
    v[free] = FqElem::one(F);
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = -a[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

const FiniteField& field_of(const FqPoly& f) {
  require(!f.is_zero(), ErrorKind::Domain, "zero local equation");
  return f.terms().begin()->second.field();
}

}  // namespace

std::size_t hessian_corank(const FqPoly& f) {
  const FiniteField& F = field_of(f);
  return f.arity() - matrix_rank(quadratic_form_matrix(f, F));
}

AdeType classify_ade(const FqPoly& f) {
  const FiniteField& F = field_of(f);
  require(F.characteristic() >= 7, ErrorKind::UnsupportedCharacteristic,
          "ADE classification needs residue characteristic at least 7");
  require(f.arity() == 3, ErrorKind::Domain, "ADE classification needs a local equation in 3 variables");
  require(f.order() >= 2, ErrorKind::Domain, "the origin is not a singular point of the local equation");

  const auto mu = milnor_number(f);
  require(mu.has_value(), ErrorKind::NonIsolated, "Milnor number does not stabilise: singularity not isolated");
  const int m = static_cast<int>(mu->mu);

  const Matrix h = quadratic_form_matrix(f, F);
  const std::size_t corank = 3 - matrix_rank(h);
  if (corank <= 1) return AdeType::make('A', m);
  require(corank == 2, ErrorKind::NotADE, "Hessian corank 3");

  // Splitting lemma: the 3-jet of the residual two-variable function is the
  // cubic part restricted to the Hessian kernel.
  const auto ker = kernel_basis(h, F);
  const std::vector<Variable> st{{"s", 1}, {"t", 1}};
  std::vector<FqPoly> images;
  for (std::size_t i = 0; i < 3; ++i) {
    images.push_back(FqPoly::variable(st, 0, ker[0][i]) + FqPoly::variable(st, 1, ker[1][i]));
  }
  const FqPoly cubic = f.homogeneous_part(3).compose(images);
  require(!cubic.is_zero(), ErrorKind::NotADE, "corank 2 with vanishing cubic term");
  const FqElem zero = FqElem::zero(F);
  auto coef = [&](std::uint32_t i) { return cubic.is_zero() ? zero : cubic.coefficient({3 - i, i}); };
  const FqElem a = coef(0), b = coef(1), c = coef(2), d = coef(3);
  const FqElem disc = b * b * c * c - a * c * c * c * 4 - b * b * b * d * 4 - a * a * d * d * 27 + a * b * c * d * 18;
  if (!disc.is_zero()) {
    require(m == 4, ErrorKind::NotADE, "three distinct cubic roots but Milnor number " + std::to_string(m));
    return AdeType::make('D', 4);
  }
  const bool triple = (b * b - a * c * 3).is_zero() && (b * c - a * d * 9).is_zero() && (c * c - b * d * 3).is_zero();
  if (!triple) {
    require(m >= 5, ErrorKind::NotADE, "double cubic root but Milnor number " + std::to_string(m));
    return AdeType::make('D', m);
  }
  require(m >= 6 && m <= 8, ErrorKind::NotADE, "triple cubic root with Milnor number " + std::to_string(m));
  return AdeType::make('E', m);
}

SingularityType singularity_type(const ModelSpec& model, unsigned max_extension, std::uint64_t budget) {
  require(model.is_hypersurface() && model.ambient.size() == 4, ErrorKind::Unsupported,
          "singularity type needs a surface hypersurface model");
  const auto search = find_singular_points(model, max_extension, budget);
  SingularityType out;
  out.complete = search.complete;
  for (std::size_t i = 0; i < search.points.size(); ++i) {
    const auto& p = search.points[i];
    out.points.push_back({p, classify_ade(local_equation(model, p)), search.milnor_numbers.at(i)});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Groups and the table

GroupDescriptor GroupDescriptor::from_cyclic_orders(const std::vector<std::int64_t>& orders) {
  std::map<std::uint64_t, std::vector<int>> by_prime;  // prime -> exponents
  for (auto n : orders) {
    require(n >= 1, ErrorKind::Domain, "cyclic orders must be positive");
    for (const auto& [q, e] : factorize(static_cast<std::uint64_t>(n))) by_prime[q].push_back(e);
  }
  std::size_t len = 0;
  for (auto& [q, es] : by_prime) {
    std::sort(es.rbegin(), es.rend());
    len = std::max(len, es.size());
  }
  std::vector<std::int64_t> factors(len, 1);
  for (const auto& [q, es] : by_prime) {
    for (std::size_t j = 0; j < es.size(); ++j) {
      for (int i = 0; i < es[j]; ++i) factors[j] *= static_cast<std::int64_t>(q);
    }
  }
  std::reverse(factors.begin(), factors.end());
  GroupDescriptor g;
  g.factors_ = std::move(factors);
  return g;
}

GroupDescriptor GroupDescriptor::parse(const std::string& text) {
  std::vector<std::int64_t> orders;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    require(!item.empty() && std::all_of(item.begin(), item.end(), ::isdigit), ErrorKind::Parse,
            "bad group descriptor '" + text + "'");
    orders.push_back(std::stoll(item));
  }
  require(!orders.empty(), ErrorKind::Parse, "empty group descriptor");
  return from_cyclic_orders(orders);
}

std::int64_t GroupDescriptor::order() const {
  std::int64_t n = 1;
  for (auto f : factors_) n *= f;
  return n;
}

std::string GroupDescriptor::str() const {
  if (factors_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < factors_.size();) {
    std::size_t j = i;
    while (j < factors_.size() && factors_[j] == factors_[i]) ++j;
    if (!out.empty()) out += " x ";
    const std::string z = "Z/" + std::to_string(factors_[i]);
    out += j - i == 1 ? z : "(" + z + ")^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

namespace {
std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}
}  // namespace

BrauerTable BrauerTable::parse(const std::string& text) {
  BrauerTable table;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (trim(line).empty()) continue;
    std::vector<std::string> fields;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, '|')) fields.push_back(trim(cell));
    require(fields.size() == 5, ErrorKind::Parse, "table line " + std::to_string(lineno) + ": expected 5 fields");
    BrauerTableEntry e;
    e.degree = std::stoi(fields[0]);
    require(e.degree >= 1 && e.degree <= 9, ErrorKind::Parse, "table line " + std::to_string(lineno) + ": bad degree");
    e.type = fields[1] == "*" ? "*" : SingularityType::canonical_label(fields[1]);
    e.br_bar = GroupDescriptor::parse(fields[2]);
    e.h1 = GroupDescriptor::parse(fields[3]);
    if (fields[4] != "?") e.br_nr = GroupDescriptor::parse(fields[4]);
    table.rows_.push_back(std::move(e));
  }
  return table;
}

const BrauerTable& BrauerTable::builtin() {
  static const BrauerTable table = parse(detail::kDefaultBrauerTable);
  return table;
}

const BrauerTableEntry& BrauerTable::lookup(int degree, const std::string& type_label) const {
  require(!type_label.empty(), ErrorKind::TableMiss, "smooth special fibre: the tables cover singular fibres only");
  const std::string label = SingularityType::canonical_label(type_label);
  for (const auto& r : rows_) {
    if (r.degree == degree && r.type == label) return r;
  }
  for (const auto& r : rows_) {
    if (r.degree == degree && r.type == "*") return r;
  }
  fail(ErrorKind::TableMiss, "no table entry for degree " + std::to_string(degree) + ", type " + label +
                                 "; the exact sequence only constrains |Br_nr| = |Br_bar| * |H1|");
}

}  // namespace brauer
