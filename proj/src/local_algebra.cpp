#include "brauer/local_algebra.hpp"

#include <map>
#include <unordered_map>

namespace brauer {

namespace {

using SparseRow = std::vector<std::pair<std::uint32_t, std::uint64_t>>;  // (column, value), sorted

// Monomials of total degree < cutoff in n variables, ordered by degree then lexicographically.
class MonomialIndex {
 public:
  MonomialIndex(std::size_t n, unsigned cutoff) : n_(n), cutoff_(cutoff) {
    Monomial m(n, 0);
    for (unsigned d = 0; d < cutoff; ++d) generate(m, 0, d);
  }

  std::size_t size() const { return monomials_.size(); }
  const Monomial& operator[](std::size_t i) const { return monomials_[i]; }

  std::uint32_t column(const Monomial& m) const { return index_.at(key(m)); }

 private:
  void generate(Monomial& m, std::size_t var, unsigned remaining) {
    if (var + 1 == n_) {
      m[var] = remaining;
      index_.emplace(key(m), static_cast<std::uint32_t>(monomials_.size()));
      monomials_.push_back(m);
      m[var] = 0;
      return;
    }
    for (int e = static_cast<int>(remaining); e >= 0; --e) {
      m[var] = static_cast<std::uint32_t>(e);
      generate(m, var + 1, remaining - static_cast<unsigned>(e));
    }
    m[var] = 0;
  }

  std::uint64_t key(const Monomial& m) const {
    std::uint64_t k = 0;
    for (auto e : m) k = k * (cutoff_ + 1) + e;
    return k;
  }

  std::size_t n_;
  unsigned cutoff_;
  std::vector<Monomial> monomials_;
  std::unordered_map<std::uint64_t, std::uint32_t> index_;
};

}  // namespace

std::uint64_t truncated_jacobian_quotient_dim(const FqPoly& f, unsigned cutoff) {
  const std::size_t n = f.arity();
  require(n >= 1, ErrorKind::Domain, "local algebra needs at least one variable");
  const MonomialIndex index(n, cutoff);
  if (f.is_zero()) return index.size();
  const FiniteField& field = f.terms().begin()->second.field();

  std::map<std::uint32_t, SparseRow> pivots;  // lead column -> row with lead coefficient 1

  auto reduce_and_insert = [&](SparseRow row) {
    while (!row.empty()) {
      const auto [lead_col, lead_val] = row.front();
      auto it = pivots.find(lead_col);
      if (it == pivots.end()) {
        const std::uint64_t inv = field.inv(lead_val);
        for (auto& [c, v] : row) v = field.mul(v, inv);
        pivots.emplace(lead_col, std::move(row));
        return;
      }
      // row <- row - lead_val * pivot
      const SparseRow& piv = it->second;
      SparseRow out;
      out.reserve(row.size() + piv.size());
      std::size_t i = 0, j = 0;
      while (i < row.size() || j < piv.size()) {
        if (j == piv.size() || (i < row.size() && row[i].first < piv[j].first)) {
          out.push_back(row[i++]);
        } else if (i == row.size() || piv[j].first < row[i].first) {
          out.emplace_back(piv[j].first, field.neg(field.mul(lead_val, piv[j].second)));
          ++j;
        } else {
          const std::uint64_t v = field.sub(row[i].second, field.mul(lead_val, piv[j].second));
          if (v) out.emplace_back(row[i].first, v);
          ++i;
          ++j;
        }
      }
      row = std::move(out);
    }
  };

  for (std::size_t var = 0; var < n; ++var) {
    const FqPoly g = f.derivative(var);
    if (g.is_zero()) continue;
    const int ord = g.order();
    for (std::size_t a = 0; a < index.size(); ++a) {
      const Monomial& alpha = index[a];
      if (FqPoly::total_degree(alpha) + ord >= static_cast<int>(cutoff)) continue;
      SparseRow row;
      for (const auto& [m, c] : g.terms()) {
        Monomial prod(n);
        for (std::size_t i = 0; i < n; ++i) prod[i] = m[i] + alpha[i];
        if (FqPoly::total_degree(prod) >= static_cast<int>(cutoff)) continue;
        row.emplace_back(index.column(prod), c.packed());
      }
      std::sort(row.begin(), row.end());
      reduce_and_insert(std::move(row));
    }
  }
  return index.size() - pivots.size();
}

std::optional<MilnorResult> milnor_number(const FqPoly& f, unsigned start, unsigned cap) {
  for (unsigned d = start; d <= cap; d *= 2) {
    const auto a = truncated_jacobian_quotient_dim(f, d);
    const auto b = truncated_jacobian_quotient_dim(f, d + 1);
    if (a != b) continue;
    const auto c = truncated_jacobian_quotient_dim(f, d + 2);
    if (b == c) return MilnorResult{a, d};
  }
  return std::nullopt;
}

}  // namespace brauer
