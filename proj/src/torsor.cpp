#include "brauer/torsor.hpp"

#include <algorithm>
#include <sstream>

namespace brauer {

namespace {

void require_form_pair(const IntPoly& num, const IntPoly& den, const std::string& what) {
  require(!num.is_zero() && !den.is_zero(), ErrorKind::Domain, what + ": zero form");
  const auto dn = num.homogeneous_weighted_degree();
  const auto dd = den.homogeneous_weighted_degree();
  require(dn && dd, ErrorKind::Domain, what + ": forms must be weighted homogeneous");
  require(*dn == *dd, ErrorKind::Domain,
          what + ": numerator and denominator degrees differ (" + std::to_string(*dn) + " vs " +
              std::to_string(*dd) + ")");
  require(num.variables() == den.variables(), ErrorKind::Domain, what + ": variable lists differ");
}

// Removes the largest monomial dividing both num and den.
void cancel_monomial(FqPoly& num, FqPoly& den) {
  const std::size_t n = num.arity();
  Monomial common(n, UINT32_MAX);
  for (const FqPoly* f : {&num, &den}) {
    for (const auto& [m, c] : f->terms()) {
      for (std::size_t i = 0; i < n; ++i) common[i] = std::min(common[i], m[i]);
    }
  }
  if (std::all_of(common.begin(), common.end(), [](std::uint32_t e) { return e == 0; })) return;
  for (FqPoly* f : {&num, &den}) {
    FqPoly r(f->variables());
    for (const auto& [m, c] : f->terms()) {
      Monomial d = m;
      for (std::size_t i = 0; i < n; ++i) d[i] -= common[i];
      r.add_term(std::move(d), c);
    }
    *f = std::move(r);
  }
}

FqPoly embed(const FqPoly& f, const FiniteField& F) {
  FqPoly r(f.variables());
  for (const auto& [m, c] : f.terms()) r.add_term(m, FqElem(F, c.packed()));
  return r;
}

bool is_unit_monomial(const FqPoly& f) {
  return f.terms().size() == 1 && FqPoly::total_degree(f.terms().begin()->first) == 0 &&
         f.terms().begin()->second.is_one();
}

std::string paren(const FqPoly& f) {
  const std::string s = to_string(f);
  return f.terms().size() > 1 ? "(" + s + ")" : s;
}

// Whether a form vanishes at every point of the fibre over F_p and F_{p^2}
// (a practical test for "identically zero on the fibre"). Inconclusive budgets
// count as "not shown to vanish".
bool vanishes_on_fibre(const FqPoly& f, const ModelSpec& model) {
  bool seen_point = false;
  for (unsigned k = 1; k <= 2; ++k) {
    const FiniteField& F = FiniteField::get(model.p, k);
    const CompiledPoly cf(embed(f, F), F);
    std::vector<std::uint64_t> x(model.ambient.size());
    bool nonzero = false;
    try {
      for_each_point(model, k, false, [&](const FibrePoint& p) {
        seen_point = true;
        for (std::size_t i = 0; i < x.size(); ++i) x[i] = p.coords[i].packed();
        nonzero = cf.eval(x.data()) != 0;
        return !nonzero;
      }, std::uint64_t{1} << 24);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::BudgetExceeded) throw;
      return false;
    }
    if (nonzero) return false;
  }
  return seen_point;
}

}  // namespace

SymbolAlgebra SymbolAlgebra::make(std::uint64_t n, BigInt a_num, BigInt a_den, IntPoly f_num, IntPoly f_den,
                                  std::vector<std::pair<IntPoly, IntPoly>> alternatives) {
  require(n >= 1, ErrorKind::Domain, "algebra order must be positive");
  require(a_num != 0 && a_den != 0, ErrorKind::Domain, "a must be a nonzero rational");
  require_form_pair(f_num, f_den, "f");
  for (const auto& [hn, hd] : alternatives) {
    require_form_pair(hn, hd, "alternative multiplier");
    require(hn.variables() == f_num.variables(), ErrorKind::Domain, "alternative over other variables");
  }
  if (a_den < 0) {
    a_num = -a_num;
    a_den = -a_den;
  }
  const BigInt g = gcd(a_num, a_den);
  SymbolAlgebra A;
  A.n = n;
  A.a_num = a_num / g;
  A.a_den = a_den / g;
  A.f_num = std::move(f_num);
  A.f_den = std::move(f_den);
  A.alternatives = std::move(alternatives);
  return A;
}

std::string SymbolAlgebra::str() const {
  std::ostringstream os;
  os << "(" << a_num;
  if (a_den != 1) os << "/" << a_den;
  os << ", (" << to_string(f_num) << ")/(" << to_string(f_den) << "))_" << n;
  return os.str();
}

KummerTorsor::KummerTorsor(std::uint64_t n, ModelSpec base, FqElem constant,
                           std::vector<ResidueRepresentative> reps, QZClass twist)
    : n_(n), base_(std::move(base)), constant_(constant), reps_(std::move(reps)), twist_(twist) {
  require(!reps_.empty(), ErrorKind::Domain, "torsor needs a representative");
  require(!constant_.is_zero(), ErrorKind::DegenerateResidue, "residue constant is zero");
  require(n_ % static_cast<std::uint64_t>(twist_.order()) == 0, ErrorKind::Domain,
          "twist class " + twist_.str() + " is not n-torsion for n = " + std::to_string(n_));
}

bool KummerTorsor::is_constant() const {
  return is_unit_monomial(reps_.front().num) && is_unit_monomial(reps_.front().den);
}

std::string KummerTorsor::str() const {
  std::ostringstream os;
  os << "T^" << n_ << " = ";
  const auto& r = reps_.front();
  if (is_constant()) {
    os << constant_.str();
  } else {
    if (!constant_.is_one()) os << constant_.str() << "*";
    os << paren(r.num);
    if (!is_unit_monomial(r.den)) os << "/" << paren(r.den);
  }
  if (!twist_.is_zero()) os << "; twist " << twist_.str();
  return os.str();
}

KummerTorsor residue(const SymbolAlgebra& A, const ModelSpec& model) {
  const std::uint64_t p = model.p;
  require(A.n >= 1 && (p - 1) % A.n == 0, ErrorKind::UnsupportedCharacter,
          "Kummer residues need n | p - 1 (n = " + std::to_string(A.n) + ", p = " + std::to_string(p) + ")");
  require(A.f_num.variables() == model.ambient.variables(), ErrorKind::Domain,
          "algebra is not over the model's variables");
  const auto n = static_cast<std::int64_t>(A.n);

  const int va = valuation(A.a_num, p) - valuation(A.a_den, p);
  const int vn = valuation(content(A.f_num), p);
  const int vd = valuation(content(A.f_den), p);
  const int vf = vn - vd;

  const FiniteField& Fp = FiniteField::get(p, 1);
  const BigInt pp(p);
  auto unit_part = [&](BigInt x) {
    while (x % pp == 0) x /= pp;
    return FqElem::from_big(Fp, x);
  };
  const FqElem u = unit_part(A.a_num) / unit_part(A.a_den);
  const auto e_u = static_cast<std::uint64_t>(((vf % n) + n) % n);
  const auto e_f = static_cast<unsigned>(((-va % n) + n) % n);
  FqElem c = u.pow(e_u);
  if ((static_cast<std::int64_t>(va) * vf) % 2 != 0) c = -c;

  const FqPoly fn = reduce_mod(divide_exact(A.f_num, ipow(pp, static_cast<unsigned>(vn))), Fp);
  const FqPoly fd = reduce_mod(divide_exact(A.f_den, ipow(pp, static_cast<unsigned>(vd))), Fp);
  if (e_f > 0) {
    require(!vanishes_on_fibre(fn, model) && !vanishes_on_fibre(fd, model), ErrorKind::DegenerateResidue,
            "f vanishes identically on the special fibre; the residue is undefined");
  }
  const std::vector<Variable>& vars = model.ambient.variables();
  const FqPoly one = FqPoly::constant(vars, FqElem::one(Fp));
  FqPoly num = e_f ? fn.pow(e_f) : one;
  FqPoly den = e_f ? fd.pow(e_f) : one;
  // Constant numerators and denominators go into c, so constant residues are recognised.
  if (num.degree() == 0) {
    c *= num.coefficient(Monomial(vars.size(), 0));
    num = one;
  }
  if (den.degree() == 0) {
    c = c / den.coefficient(Monomial(vars.size(), 0));
    den = one;
  }

  std::vector<ResidueRepresentative> reps;
  FqPoly n0 = num, d0 = den;
  cancel_monomial(n0, d0);
  reps.push_back({n0, d0});
  for (const auto& [hn, hd] : A.alternatives) {
    FqPoly an = num * reduce_mod(hn, Fp).pow(static_cast<unsigned>(A.n));
    FqPoly ad = den * reduce_mod(hd, Fp).pow(static_cast<unsigned>(A.n));
    require(!an.is_zero() && !ad.is_zero(), ErrorKind::Domain, "alternative multiplier vanishes mod p");
    cancel_monomial(an, ad);
    reps.push_back({std::move(an), std::move(ad)});
  }
  return KummerTorsor(A.n, model, c, std::move(reps));
}

KummerTorsor twist(const KummerTorsor& T, const QZClass& c) {
  require(static_cast<std::int64_t>(T.n()) % c.order() == 0, ErrorKind::Domain,
          "twist class " + c.str() + " does not have order dividing " + std::to_string(T.n()));
  return KummerTorsor(T.n(), T.base(), T.constant(), T.representatives(), T.twist_class() + c);
}

FibreClassifier::FibreClassifier(const KummerTorsor& torsor, unsigned k)
    : torsor_(&torsor), field_(&FiniteField::get(torsor.base().p, k)), k_(k),
      constant_(torsor.constant().packed()) {
  require((field_->order() - 1) % torsor.n() == 0, ErrorKind::UnsupportedCharacter, "n does not divide q - 1");
  for (const auto& r : torsor.representatives()) {
    reps_.push_back({CompiledPoly(embed(r.num, *field_), *field_), CompiledPoly(embed(r.den, *field_), *field_)});
  }
}

std::optional<QZClass> FibreClassifier::try_classify(const std::vector<FqElem>& coords) const {
  buf_.resize(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) buf_[i] = coords[i].packed();
  for (const auto& r : reps_) {
    const std::uint64_t num = r.num.eval(buf_.data());
    if (num == 0) continue;
    const std::uint64_t den = r.den.eval(buf_.data());
    if (den == 0) continue;
    const std::uint64_t value = field_->mul(constant_, field_->mul(num, field_->inv(den)));
    const auto j = field_->base_character_index(value, torsor_->n());
    return QZClass(static_cast<std::int64_t>(j), static_cast<std::int64_t>(torsor_->n())) +
           torsor_->twist_class() * static_cast<std::int64_t>(k_);
  }
  return std::nullopt;
}

QZClass FibreClassifier::classify(const FibrePoint& point) const {
  require(point.field_degree == k_, ErrorKind::Domain, "point over a different field");
  const auto c = try_classify(point.coords);
  require(c.has_value(), ErrorKind::IndeterminateAtPoint,
          "residue function is indeterminate at " + point.str() + " for every registered representative");
  return *c;
}

QZClass fibre_class(const KummerTorsor& torsor, const FibrePoint& point) {
  require(is_smooth_point(torsor.base(), point), ErrorKind::SingularReduction,
          "fibre classes are defined on the smooth locus only; " + point.str() + " is singular");
  return FibreClassifier(torsor, point.field_degree).classify(point);
}

TwistCount count_twist_points(const KummerTorsor& torsor, unsigned k, std::uint64_t budget) {
  const FibreClassifier cls(torsor, k);
  TwistCount out;
  for_each_point(torsor.base(), k, true, [&](const FibrePoint& p) {
    const auto c = cls.try_classify(p.coords);
    if (!c) {
      ++out.indeterminate_points;
    } else {
      ++out.determinate_points;
      if (c->is_zero()) ++out.zero_class_points;
    }
    return true;
  }, budget);
  out.torsor_points = out.zero_class_points * torsor.n();
  return out;
}

NonconstancyWitness nonconstancy_witness(const KummerTorsor& torsor, unsigned max_degree, std::uint64_t budget) {
  NonconstancyWitness w;
  for (unsigned k = 1; k <= max_degree; ++k) {
    if ((FiniteField::get(torsor.base().p, k).order() - 1) % torsor.n() != 0) continue;
    const FibreClassifier cls(torsor, k);
    std::optional<QZClass> first;
    for_each_point(torsor.base(), k, true, [&](const FibrePoint& p) {
      const auto c = cls.try_classify(p.coords);
      if (!c) return true;
      if (!first) {
        first = c;
        w.first = p;
        w.first_class = *c;
        return true;
      }
      if (*c == *first) return true;
      w.nonconstant = true;
      w.degree = k;
      w.second = p;
      w.second_class = *c;
      return false;
    }, budget);
    if (w.nonconstant) return w;
  }
  return NonconstancyWitness{};
}

}  // namespace brauer
