#include "brauer/model.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>

#include "brauer/local_algebra.hpp"

namespace brauer {

// ---------------------------------------------------------------------------
// Ambient space and model

AmbientSpace::AmbientSpace(std::vector<std::string> names, std::vector<int> weights) {
  require(names.size() == weights.size(), ErrorKind::Domain, "one weight per variable required");
  require(names.size() >= 2, ErrorKind::Domain, "ambient space needs at least two variables");
  std::set<std::string> seen;
  for (const auto& n : names) {
    require(!n.empty(), ErrorKind::Domain, "empty variable name");
    require(seen.insert(n).second, ErrorKind::Domain, "duplicate variable " + n);
  }
  std::vector<int> sorted = weights;
  std::sort(sorted.begin(), sorted.end());
  const bool ones = std::all_of(sorted.begin(), sorted.end(), [](int w) { return w == 1; });
  require(ones || sorted == std::vector<int>{1, 1, 2, 3}, ErrorKind::Unsupported,
          "only P^n and P(1,1,2,3) are supported");
  for (std::size_t i = 0; i < names.size(); ++i) vars_.push_back({std::move(names[i]), weights[i]});
}

AmbientSpace AmbientSpace::projective(std::vector<std::string> names) {
  std::vector<int> w(names.size(), 1);
  return AmbientSpace(std::move(names), std::move(w));
}

bool AmbientSpace::all_weights_one() const {
  return std::all_of(vars_.begin(), vars_.end(), [](const Variable& v) { return v.weight == 1; });
}

std::vector<std::size_t> AmbientSpace::weight_one_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i].weight == 1) out.push_back(i);
  }
  return out;
}

std::string AmbientSpace::label() const {
  if (all_weights_one()) return "P^" + std::to_string(dimension());
  std::string s = "P(";
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(vars_[i].weight);
  }
  return s + ")";
}

ModelSpec ModelSpec::make(std::string label, AmbientSpace ambient, std::vector<IntPoly> equations,
                          std::uint64_t p) {
  require(is_prime(p), ErrorKind::Domain, std::to_string(p) + " is not prime");
  require(p < (std::uint64_t{1} << 32), ErrorKind::Unsupported, "residue characteristic too large");
  require(static_cast<int>(equations.size()) < ambient.dimension(), ErrorKind::Domain,
          "too many equations for the ambient space");
  for (const auto& f : equations) {
    require(f.variables() == ambient.variables(), ErrorKind::Domain,
            "equation is not over the ambient variables");
    require(!f.is_zero(), ErrorKind::Domain, "zero equation");
    require(f.homogeneous_weighted_degree().has_value(), ErrorKind::Domain,
            "equation is not weighted homogeneous: " + to_string(f));
    require(*f.homogeneous_weighted_degree() > 0, ErrorKind::Domain, "constant equation");
    require(content(f) % p != 0, ErrorKind::Domain,
            "equation vanishes identically mod " + std::to_string(p) + ": " + to_string(f));
  }
  ModelSpec m;
  m.label = std::move(label);
  m.ambient = std::move(ambient);
  m.equations = std::move(equations);
  m.p = p;
  return m;
}

std::vector<int> ModelSpec::degrees() const {
  std::vector<int> d;
  for (const auto& f : equations) d.push_back(*f.homogeneous_weighted_degree());
  return d;
}

std::string ModelSpec::canonical_text() const {
  std::ostringstream os;
  os << "ambient " << ambient.label() << " [";
  for (std::size_t i = 0; i < ambient.size(); ++i) {
    if (i) os << ' ';
    os << ambient.variables()[i].name << ':' << ambient.variables()[i].weight;
  }
  os << "]; p " << p;
  for (const auto& f : equations) os << "; " << to_string(f) << " = 0";
  return os.str();
}

std::uint64_t ModelSpec::hash() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : canonical_text()) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string FibrePoint::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) s += ':';
    s += coords[i].str();
  }
  return s + ")";
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return a * b;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  return a > std::numeric_limits<std::uint64_t>::max() - b ? std::numeric_limits<std::uint64_t>::max()
                                                           : a + b;
}

std::uint64_t sat_pow(std::uint64_t q, std::size_t e) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < e; ++i) r = sat_mul(r, q);
  return r;
}

std::size_t packed_rank(const FiniteField& F, std::vector<std::vector<std::uint64_t>> rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    const std::uint64_t inv = F.inv(rows[rank][c]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c] == 0) continue;
      const std::uint64_t f = F.mul(rows[r][c], inv);
      for (std::size_t j = c; j < cols; ++j) rows[r][j] = F.sub(rows[r][j], F.mul(f, rows[rank][j]));
    }
    ++rank;
  }
  return rank;
}

enum class Filter { All, SmoothOnly, SingularOnly };

class Enumerator {
 public:
  Enumerator(const ModelSpec& model, unsigned k, std::uint64_t budget)
      : model_(model), field_(FiniteField::get(model.p, k)), q_(field_.order()), budget_(budget) {
    const std::size_t n = model.ambient.size();
    for (const auto& f : model.equations) eqs_.emplace_back(f, field_);
    const auto apex = apex_variables(model);
    std::vector<bool> is_apex(n, false);
    for (auto a : apex) is_apex[a] = true;
    const auto w1 = model.ambient.weight_one_indices();
    for (std::size_t ci = 0; ci < w1.size(); ++ci) {
      Chart c;
      c.var = w1[ci];
      std::vector<bool> fixed(n, false);
      fixed[c.var] = true;
      for (std::size_t z = 0; z < ci; ++z) {
        c.zeros.push_back(w1[z]);
        fixed[w1[z]] = true;
      }
      for (std::size_t i = 0; i < n; ++i) {
        if (fixed[i]) continue;
        (is_apex[i] ? c.apex : c.base).push_back(i);
      }
      for (std::size_t i = 0; i < n; ++i) {
        if (i == c.var) continue;
        c.partial_vars.push_back(i);
        for (const auto& f : model.equations) c.partials.emplace_back(f.derivative(i), field_);
      }
      charts_.push_back(std::move(c));
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (model.ambient.variables()[i].weight != 1) heavy_.push_back(i);
    }
  }

  EnumerationStats run(Filter filter, const PointVisitor* visit) {
    EnumerationStats stats;
    std::uint64_t estimate = 0;
    for (const auto& c : charts_) estimate = sat_add(estimate, sat_pow(q_, c.base.size()));
    if (!heavy_.empty()) estimate = sat_add(estimate, sat_pow(q_, heavy_.size()));
    require(estimate <= budget_, ErrorKind::BudgetExceeded,
            "enumeration over F_" + std::to_string(q_) + " needs about " + std::to_string(estimate) +
                " evaluations, budget is " + std::to_string(budget_));

    const std::size_t n = model_.ambient.size();
    std::vector<std::uint64_t> vals(n, 0);
    FibrePoint fp;
    fp.coords.assign(n, FqElem::zero(field_));
    fp.field_degree = field_.degree();
    std::uint64_t work = estimate;

    for (const auto& c : charts_) {
      std::fill(vals.begin(), vals.end(), 0);
      vals[c.var] = 1;
      const std::uint64_t fan = sat_pow(q_, c.apex.size());
      do {
        ++stats.evaluations;
        if (!on_fibre(vals.data())) continue;
        const bool smooth = smooth_at(c, vals.data());
        if (!smooth) stats.singular = sat_add(stats.singular, fan);
        if ((filter == Filter::SmoothOnly && !smooth) || (filter == Filter::SingularOnly && smooth)) {
          continue;
        }
        if (!visit) {
          stats.points = sat_add(stats.points, fan);
          continue;
        }
        for (auto a : c.apex) vals[a] = 0;
        do {
          require(++work <= budget_, ErrorKind::BudgetExceeded,
                  "point enumeration exceeded the budget of " + std::to_string(budget_));
          ++stats.points;
          for (std::size_t i = 0; i < n; ++i) fp.coords[i] = FqElem(field_, vals[i]);
          fp.smooth = smooth;
          fp.chart = c.var;
          fp.field_of_definition = definition_degree(fp.coords);
          if (!(*visit)(fp)) {
            stats.stopped_early = true;
            return stats;
          }
        } while (advance(vals, c.apex));
        for (auto a : c.apex) vals[a] = 0;
      } while (advance(vals, c.base));
    }

    if (!heavy_.empty()) count_off_chart(stats);
    return stats;
  }

 private:
  struct Chart {
    std::size_t var = 0;
    std::vector<std::size_t> zeros, base, apex, partial_vars;
    std::vector<CompiledPoly> partials;  // [var][equation]
  };

  bool advance(std::vector<std::uint64_t>& vals, const std::vector<std::size_t>& idx) const {
    for (auto it = idx.rbegin(); it != idx.rend(); ++it) {
      if (++vals[*it] < q_) return true;
      vals[*it] = 0;
    }
    return false;
  }

  bool on_fibre(const std::uint64_t* x) const {
    return std::all_of(eqs_.begin(), eqs_.end(), [&](const CompiledPoly& f) { return f.eval(x) == 0; });
  }

  bool smooth_at(const Chart& c, const std::uint64_t* x) const {
    const std::size_t m = eqs_.size();
    if (m == 0) return true;
    if (m == 1) {
      return std::any_of(c.partials.begin(), c.partials.end(),
                         [&](const CompiledPoly& d) { return d.eval(x) != 0; });
    }
    std::vector<std::vector<std::uint64_t>> rows(m, std::vector<std::uint64_t>(c.partial_vars.size()));
    for (std::size_t j = 0; j < c.partial_vars.size(); ++j) {
      for (std::size_t e = 0; e < m; ++e) rows[e][j] = c.partials[j * m + e].eval(x);
    }
    return packed_rank(field_, std::move(rows)) == m;
  }

  unsigned definition_degree(const std::vector<FqElem>& coords) const {
    if (field_.degree() == 1) return 1;
    std::int64_t e = 1;
    for (const auto& x : coords) {
      if (x.packed() < model_.p) continue;  // prime field
      e = lcm64(e, x.field_of_definition());
    }
    return static_cast<unsigned>(e);
  }

  // Orbits of (0:...:0:heavy coordinates) under the weighted scaling action.
  void count_off_chart(EnumerationStats& stats) const {
    const std::size_t n = model_.ambient.size();
    std::vector<std::uint64_t> vals(n, 0);
    std::vector<std::uint64_t> orig(heavy_.size()), img(heavy_.size());
    while (advance(vals, heavy_)) {
      ++stats.evaluations;
      if (!on_fibre(vals.data())) continue;
      for (std::size_t i = 0; i < heavy_.size(); ++i) orig[i] = vals[heavy_[i]];
      bool canonical = true;
      for (std::uint64_t lambda = 2; lambda < q_ && canonical; ++lambda) {
        for (std::size_t i = 0; i < heavy_.size(); ++i) {
          const int w = model_.ambient.variables()[heavy_[i]].weight;
          img[i] = field_.mul(field_.pow(lambda, static_cast<std::uint64_t>(w)), orig[i]);
        }
        if (img < orig) canonical = false;
      }
      if (canonical) {
        ++stats.off_chart;
        stats.off_chart_present = true;
      }
    }
  }

  const ModelSpec& model_;
  const FiniteField& field_;
  std::uint64_t q_;
  std::uint64_t budget_;
  std::vector<CompiledPoly> eqs_;
  std::vector<Chart> charts_;
  std::vector<std::size_t> heavy_;
};

}  // namespace

EnumerationStats for_each_point(const ModelSpec& model, unsigned k, bool smooth_only,
                                const PointVisitor& visit, std::uint64_t budget) {
  Enumerator e(model, k, budget);
  return e.run(smooth_only ? Filter::SmoothOnly : Filter::All, &visit);
}

std::vector<FibrePoint> enumerate_points(const ModelSpec& model, unsigned k, bool smooth_only,
                                         std::uint64_t budget) {
  std::vector<FibrePoint> out;
  for_each_point(model, k, smooth_only, [&](const FibrePoint& p) {
    out.push_back(p);
    return true;
  }, budget);
  return out;
}

std::uint64_t count_points(const ModelSpec& model, unsigned k, bool smooth_only, std::uint64_t budget,
                           EnumerationStats* stats) {
  Enumerator e(model, k, budget);
  const EnumerationStats s = e.run(smooth_only ? Filter::SmoothOnly : Filter::All, nullptr);
  if (stats) *stats = s;
  return s.points;
}

// ---------------------------------------------------------------------------
// Points

FibrePoint normalize_point(const AmbientSpace& ambient, std::vector<FqElem> coords) {
  require(coords.size() == ambient.size(), ErrorKind::Domain, "point has the wrong number of coordinates");
  require(!coords.empty() && coords.front().has_field(), ErrorKind::Domain, "coordinates lack a field");
  const FiniteField& F = coords.front().field();
  std::optional<std::size_t> chart;
  for (auto i : ambient.weight_one_indices()) {
    if (!coords[i].is_zero()) {
      chart = i;
      break;
    }
  }
  require(chart.has_value(), ErrorKind::UnsupportedChart, "point lies off every weight-1 chart");
  const FqElem lambda = coords[*chart].inverse();
  FibrePoint p;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    require(coords[i].field() == F, ErrorKind::Domain, "coordinates from different fields");
    p.coords.push_back(coords[i] * lambda.pow(static_cast<std::uint64_t>(ambient.variables()[i].weight)));
  }
  p.chart = *chart;
  p.field_degree = F.degree();
  std::int64_t e = 1;
  for (const auto& x : p.coords) e = lcm64(e, x.field_of_definition());
  p.field_of_definition = static_cast<unsigned>(e);
  return p;
}

bool same_point(const AmbientSpace& ambient, const std::vector<FqElem>& a, const std::vector<FqElem>& b) {
  return normalize_point(ambient, a).coords == normalize_point(ambient, b).coords;
}

bool lies_on_fibre(const ModelSpec& model, const FibrePoint& point) {
  require(!point.coords.empty(), ErrorKind::Domain, "empty point");
  const FiniteField& F = point.coords.front().field();
  for (const auto& f : model.equations) {
    if (!reduce_mod(f, F).evaluate(point.coords).is_zero()) return false;
  }
  return true;
}

bool is_smooth_point(const ModelSpec& model, const FibrePoint& point) {
  require(!point.coords.empty(), ErrorKind::Domain, "empty point");
  const FiniteField& F = point.coords.front().field();
  require(model.ambient.variables().at(point.chart).weight == 1 && !point.coords[point.chart].is_zero(),
          ErrorKind::UnsupportedChart, "point chart is not a nonvanishing weight-1 coordinate");
  std::vector<std::vector<FqElem>> rows;
  for (const auto& f : model.equations) {
    const FqPoly g = reduce_mod(f, F);
    std::vector<FqElem> row;
    for (std::size_t i = 0; i < model.ambient.size(); ++i) {
      if (i == point.chart) continue;
      const FqPoly d = g.derivative(i);
      row.push_back(d.is_zero() ? FqElem::zero(F) : d.evaluate(point.coords));
    }
    rows.push_back(std::move(row));
  }
  return matrix_rank(std::move(rows)) == model.equations.size();
}

// ---------------------------------------------------------------------------
// Singular locus

FqPoly local_equation(const ModelSpec& model, const FibrePoint& point) {
  require(model.is_hypersurface(), ErrorKind::Unsupported, "local equations need a hypersurface model");
  const FiniteField& F = point.coords.front().field();
  const std::string& chart_name = model.ambient.variables().at(point.chart).name;
  const FqPoly affine = dehomogenize(reduce_mod(model.equations.front(), F), chart_name);
  std::vector<FqElem> shift;
  for (std::size_t i = 0; i < point.coords.size(); ++i) {
    if (i != point.chart) shift.push_back(point.coords[i]);
  }
  return shift_to_point(affine, shift);
}

SingularPointSearch find_singular_points(const ModelSpec& model, unsigned max_extension,
                                         std::uint64_t budget) {
  require(max_extension >= 1, ErrorKind::Domain, "extension degree must be positive");
  require(!model.equations.empty(), ErrorKind::Domain, "no equations");
  SingularPointSearch out;
  // Isolated singular points are bounded in number by a Bezout-type bound on the
  // partial derivatives; exceeding it means a positive-dimensional singular locus.
  const auto degs = model.degrees();
  const int dmax = *std::max_element(degs.begin(), degs.end());
  const std::uint64_t bound = sat_pow(static_cast<std::uint64_t>(dmax), model.ambient.size() - 1);
  bool new_at_last = false;
  for (unsigned k = 1; k <= max_extension; ++k) {
    std::uint64_t found = 0;
    bool fresh = false;
    Enumerator e(model, k, budget);
    const PointVisitor visit = [&](const FibrePoint& p) {
      require(++found <= bound, ErrorKind::NonIsolated,
              "more than " + std::to_string(bound) + " singular points over F_" +
                  std::to_string(p.coords.front().field().order()) + ": the singular locus is not isolated");
      if (p.field_of_definition == k) {
        out.points.push_back(p);
        fresh = true;
      }
      return true;
    };
    e.run(Filter::SingularOnly, &visit);
    out.count_by_degree.push_back(found);
    new_at_last = fresh;
  }
  if (model.is_hypersurface()) {
    for (const auto& p : out.points) {
      const auto mu = milnor_number(local_equation(model, p));
      require(mu.has_value(), ErrorKind::NonIsolated, "singular point " + p.str() + " is not isolated");
      out.milnor_numbers.push_back(mu->mu);
    }
  }
  out.complete = max_extension >= 2 && !new_at_last;
  return out;
}

// ---------------------------------------------------------------------------
// Regularity of the total space

namespace {

// Arithmetic in (Z/p^2)[t]/(M(t)), M the monic lift of the field modulus.
class LiftRing {
 public:
  explicit LiftRing(const FiniteField& F)
      : k_(F.degree()), p_(F.characteristic()), m_(p_ * p_), modulus_(F.modulus()) {}

  using Elem = std::vector<std::uint64_t>;

  Elem constant(std::uint64_t c) const {
    Elem e(k_, 0);
    e[0] = c % m_;
    return e;
  }
  Elem add(const Elem& a, const Elem& b) const {
    Elem r(k_);
    for (unsigned i = 0; i < k_; ++i) r[i] = (a[i] + b[i]) % m_;
    return r;
  }
  Elem mul(const Elem& a, const Elem& b) const {
    std::vector<std::uint64_t> prod(2 * k_ - 1, 0);
    for (unsigned i = 0; i < k_; ++i) {
      for (unsigned j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + mulmod(a[i], b[j], m_)) % m_;
    }
    // t^k = -sum c_i t^i
    for (unsigned d = 2 * k_ - 2; d >= k_; --d) {
      const std::uint64_t top = prod[d];
      prod[d] = 0;
      for (unsigned i = 0; i < k_; ++i) {
        const std::uint64_t sub = mulmod(top, modulus_[i], m_);
        prod[d - k_ + i] = (prod[d - k_ + i] + m_ - sub) % m_;
      }
    }
    prod.resize(k_);
    return prod;
  }
  std::uint64_t modulus() const { return m_; }
  std::uint64_t p() const { return p_; }

 private:
  unsigned k_;
  std::uint64_t p_, m_;
  std::vector<std::uint64_t> modulus_;
};

}  // namespace

bool regularity_check_with_lift(const ModelSpec& model, const FibrePoint& point,
                                const std::vector<std::vector<std::uint64_t>>& lift) {
  require(model.is_hypersurface(), ErrorKind::Unsupported, "regularity check needs a hypersurface model");
  require(lies_on_fibre(model, point), ErrorKind::Domain, "point " + point.str() + " is not on the fibre");
  if (is_smooth_point(model, point)) return true;
  const FiniteField& F = point.coords.front().field();
  const LiftRing R(F);
  require(lift.size() == point.coords.size(), ErrorKind::Domain, "one lift per coordinate required");
  for (std::size_t i = 0; i < lift.size(); ++i) {
    require(lift[i].size() == F.degree(), ErrorKind::Domain, "lift has the wrong length");
    auto c = point.coords[i].coords();
    for (unsigned j = 0; j < F.degree(); ++j) {
      require(lift[i][j] < R.modulus() && lift[i][j] % R.p() == c[j], ErrorKind::Domain,
              "lift does not reduce to the point");
    }
  }
  const IntPoly& f = model.equations.front();
  LiftRing::Elem acc(F.degree(), 0);
  std::vector<std::vector<LiftRing::Elem>> powers(lift.size());
  for (const auto& [m, c] : f.terms()) {
    BigInt cm = c % R.modulus();
    if (cm < 0) cm += R.modulus();
    LiftRing::Elem t = R.constant(static_cast<std::uint64_t>(cm));
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(R.constant(1));
      while (pw.size() <= m[i]) pw.push_back(R.mul(pw.back(), lift[i]));
      t = R.mul(t, pw[m[i]]);
    }
    acc = R.add(acc, t);
  }
  bool nonzero = false;
  for (auto v : acc) {
    require(v % R.p() == 0, ErrorKind::Domain, "lift is not on the fibre");
    if ((v / R.p()) % R.p() != 0) nonzero = true;
  }
  return nonzero;
}

bool regularity_check(const ModelSpec& model, const FibrePoint& point) {
  std::vector<std::vector<std::uint64_t>> lift;
  for (const auto& x : point.coords) lift.push_back(x.coords());
  return regularity_check_with_lift(model, point, lift);
}

// ---------------------------------------------------------------------------
// Cones and connectivity

namespace {

// The equation with every p-divisible term removed; it has the same special fibre.
IntPoly drop_p_divisible_terms(const IntPoly& f, std::uint64_t p) {
  IntPoly r(f.variables());
  for (const auto& [m, c] : f.terms()) {
    if (c % p != 0) r.add_term(m, c);
  }
  return r;
}

}  // namespace

std::vector<std::size_t> apex_variables(const ModelSpec& model) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < model.ambient.size(); ++i) {
    const bool used = std::any_of(model.equations.begin(), model.equations.end(), [&](const IntPoly& f) {
      return drop_p_divisible_terms(f, model.p).uses_variable(i);
    });
    if (!used) out.push_back(i);
  }
  return out;
}

ModelSpec cone_base(const ModelSpec& model) {
  require(model.ambient.all_weights_one(), ErrorKind::Unsupported, "cone base needs an unweighted ambient space");
  const auto apex = apex_variables(model);
  require(!apex.empty(), ErrorKind::Domain, "the fibre is not a cone");
  require(apex.size() + 2 <= model.ambient.size(), ErrorKind::Domain, "cone base would be empty");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < model.ambient.size(); ++i) {
    if (!std::binary_search(apex.begin(), apex.end(), i)) names.push_back(model.ambient.variables()[i].name);
  }
  std::vector<IntPoly> eqs;
  for (const auto& eq : model.equations) {
    IntPoly f = drop_p_divisible_terms(eq, model.p);
    for (auto it = apex.rbegin(); it != apex.rend(); ++it) f = f.without_variable(*it);
    eqs.push_back(std::move(f));
  }
  return ModelSpec::make(model.label + " (cone base)", AmbientSpace::projective(std::move(names)),
                         std::move(eqs), model.p);
}

void require_connected_smooth_locus(const ModelSpec& model, std::uint64_t budget) {
  if (model.equations.empty()) return;
  const int dim = model.fibre_dimension();
  require(dim >= 1, ErrorKind::Component, "zero-dimensional fibre");
  SingularPointSearch search;
  try {
    search = find_singular_points(model, 2, budget);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NonIsolated) throw;
    fail(ErrorKind::Component, "singular locus is positive-dimensional; cannot certify the smooth locus "
                               "is geometrically connected");
  }
  if (dim == 1) {
    require(search.points.empty(), ErrorKind::Component,
            "singular curve fibre: the smooth locus may be disconnected");
  }
  // dim >= 2 with isolated singularities: the fibre is normal and connected, hence irreducible.
}

}  // namespace brauer
