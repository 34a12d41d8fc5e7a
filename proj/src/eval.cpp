#include "brauer/eval.hpp"

#include <deque>
#include <numeric>

namespace brauer {

// ---------------------------------------------------------------------------
// Hilbert symbol oracle

int legendre_symbol(const BigInt& a, std::uint64_t p) {
  require(p > 2 && is_prime(p), ErrorKind::Domain, "Legendre symbol needs an odd prime");
  const BigInt r = powm(BigInt(mod_u64(a, p)), BigInt((p - 1) / 2), BigInt(p));
  if (r == 0) return 0;
  return r == 1 ? 1 : -1;
}

int hilbert_symbol(const BigInt& a_num, const BigInt& a_den, const BigInt& b_num, const BigInt& b_den,
                   std::uint64_t p) {
  require(p != 2, ErrorKind::Unsupported, "the Hilbert symbol at 2 is not implemented");
  require(is_prime(p), ErrorKind::Domain, std::to_string(p) + " is not prime");
  require(a_num != 0 && a_den != 0 && b_num != 0 && b_den != 0, ErrorKind::Domain,
          "Hilbert symbol arguments must be nonzero");
  const BigInt pp(p);
  auto split = [&](BigInt num, BigInt den, int& v) {
    v = 0;
    while (num % pp == 0) {
      num /= pp;
      ++v;
    }
    while (den % pp == 0) {
      den /= pp;
      --v;
    }
    return legendre_symbol(num, p) * legendre_symbol(den, p);  // Legendre symbol of the unit part
  };
  int alpha = 0, beta = 0;
  const int leg_u = split(a_num, a_den, alpha);
  const int leg_v = split(b_num, b_den, beta);
  int s = 1;
  if ((static_cast<std::int64_t>(alpha) * beta) % 2 != 0 && ((p - 1) / 2) % 2 != 0) s = -s;
  if (beta % 2 != 0) s *= leg_u;
  if (alpha % 2 != 0) s *= leg_v;
  return s;
}

// ---------------------------------------------------------------------------
// p-adic points

namespace {

BigInt pos_mod(const BigInt& x, const BigInt& m) {
  BigInt r = x % m;
  if (r < 0) r += m;
  return r;
}

BigInt inverse_mod(const BigInt& a, const BigInt& m) {
  BigInt t = 0, new_t = 1, r = m, new_r = pos_mod(a, m);
  while (new_r != 0) {
    const BigInt q = r / new_r;
    BigInt tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  require(r == 1, ErrorKind::Domain, "not invertible");
  return pos_mod(t, m);
}

void check_coords(const ModelSpec& model, const std::vector<BigInt>& coords) {
  require(coords.size() == model.ambient.size(), ErrorKind::Domain, "point has the wrong number of coordinates");
  const BigInt pp(model.p);
  bool on_chart = false;
  for (auto i : model.ambient.weight_one_indices()) on_chart = on_chart || coords[i] % pp != 0;
  require(on_chart, ErrorKind::Domain, "point is not primitive at p on a weight-1 chart");
}

}  // namespace

PadicPoint PadicPoint::exact(const ModelSpec& model, std::vector<BigInt> coords) {
  check_coords(model, coords);
  for (const auto& f : model.equations) {
    require(f.evaluate(coords) == 0, ErrorKind::Domain, "point does not satisfy " + to_string(f));
  }
  PadicPoint P;
  P.coords = std::move(coords);
  return P;
}

PadicPoint PadicPoint::approximate(const ModelSpec& model, std::vector<BigInt> coords, unsigned precision) {
  require(precision >= 2, ErrorKind::Domain, "approximate points need precision at least 2");
  check_coords(model, coords);
  const BigInt M = ipow(BigInt(model.p), precision);
  for (const auto& f : model.equations) {
    require(pos_mod(f.evaluate(coords), M) == 0, ErrorKind::Domain,
            "point does not satisfy " + to_string(f) + " mod p^" + std::to_string(precision));
  }
  PadicPoint P;
  P.coords = std::move(coords);
  P.precision = precision;
  const FibrePoint red = P.reduction(model);
  require(red.smooth, ErrorKind::SingularReduction,
          "approximate point reduces to the singular point " + red.str() + "; no Hensel certificate");
  return P;
}

FibrePoint PadicPoint::reduction(const ModelSpec& model) const {
  const FiniteField& F = FiniteField::get(model.p, 1);
  std::vector<FqElem> c;
  for (const auto& x : coords) c.push_back(FqElem::from_big(F, x));
  FibrePoint p = normalize_point(model.ambient, std::move(c));
  p.smooth = is_smooth_point(model, p);
  return p;
}

PadicPoint hensel_lift(const ModelSpec& model, const FibrePoint& point, unsigned precision,
                       std::optional<std::vector<BigInt>> start) {
  require(model.is_hypersurface(), ErrorKind::Unsupported, "Hensel lifting is implemented for hypersurfaces");
  require(point.field_degree == 1, ErrorKind::Domain, "Hensel lifting starts from an F_p-point");
  require(precision >= 2, ErrorKind::Domain, "precision must be at least 2");
  require(is_smooth_point(model, point), ErrorKind::SingularReduction, "cannot lift from a singular point");
  const BigInt pp(model.p);
  std::vector<BigInt> x;
  if (start) {
    x = *start;
    require(x.size() == point.coords.size(), ErrorKind::Domain, "start lift has the wrong length");
    for (std::size_t i = 0; i < x.size(); ++i) {
      require(pos_mod(x[i], pp) == point.coords[i].packed(), ErrorKind::Domain, "start lift does not reduce to the point");
    }
  } else {
    for (const auto& c : point.coords) x.emplace_back(c.packed());
  }
  const IntPoly& F = model.equations.front();
  std::optional<std::size_t> j;
  for (std::size_t i = 0; i < x.size() && !j; ++i) {
    if (i == point.chart) continue;
    const IntPoly d = F.derivative(i);
    if (!d.is_zero() && pos_mod(d.evaluate(x), pp) != 0) j = i;
  }
  require(j.has_value(), ErrorKind::SingularReduction, "no nonvanishing partial derivative");
  const IntPoly dF = F.derivative(*j);
  const BigInt M = ipow(pp, precision);
  for (unsigned it = 0; it <= precision + 1; ++it) {
    const BigInt v = pos_mod(F.evaluate(x), M);
    if (v == 0) break;
    x[*j] = pos_mod(x[*j] - v * inverse_mod(dF.evaluate(x), M), M);
  }
  return PadicPoint::approximate(model, std::move(x), precision);
}

namespace {

// When n | v(a) the residue does not see f, and a point whose reduction meets
// the zeros or poles of f~ may lie on the horizontal ramification of
// (a, f) ~ (u, f). There the tame symbol differs from the fibre value by
// e * chi(u), where e is the excess valuation of f(P); refuse when that is nonzero.
void check_unramified_at(const SymbolAlgebra& A, const PadicPoint& P, const ModelSpec& model) {
  const std::uint64_t p = model.p;
  const auto n = static_cast<std::int64_t>(A.n);
  const int va = valuation(A.a_num, p) - valuation(A.a_den, p);
  if (va % n != 0) return;  // f enters the residue, which is indeterminate at such points
  const BigInt pp(p);
  auto unit_part = [&](BigInt x) {
    while (x % pp == 0) x /= pp;
    return x;
  };
  const FiniteField& Fp = FiniteField::get(p, 1);
  const FqElem u = FqElem::from_big(Fp, unit_part(A.a_num)) / FqElem::from_big(Fp, unit_part(A.a_den));
  const QZClass chi_u = prime_normalized_character(u, A.n);
  if (chi_u.is_zero()) return;
  auto excess = [&](const IntPoly& f) {
    const BigInt v = f.evaluate(P.coords);
    const int vc = valuation(content(f), p);
    require(v != 0, ErrorKind::Domain, "f has a zero or pole at the point");
    const BigInt known = P.precision ? pos_mod(v, ipow(pp, P.precision)) : v;
    require(known != 0, ErrorKind::IndeterminateAtPoint,
            "the valuation of f at the point exceeds its precision " + std::to_string(P.precision));
    return valuation(known, p) - vc;
  };
  const int e = excess(A.f_num) - excess(A.f_den);
  require((chi_u * e).is_zero(), ErrorKind::RamifiedAtPoint,
          "the point reduces onto the divisor of f, along which " + A.str() + " is ramified");
}

}  // namespace

QZClass evaluate_algebra(const SymbolAlgebra& algebra, const PadicPoint& point, const ModelSpec& model) {
  const FibrePoint red = point.reduction(model);
  require(red.smooth, ErrorKind::SingularReduction,
          "point reduces to the singular point " + red.str() + " of the special fibre");
  check_unramified_at(algebra, point, model);
  const KummerTorsor T = residue(algebra, model);
  return FibreClassifier(T, 1).classify(red);
}

// ---------------------------------------------------------------------------
// Images

std::vector<QZClass> EvalReport::image() const {
  std::vector<QZClass> out;
  for (const auto& [c, s] : classes) out.push_back(c);
  return out;
}

EvalReport evaluation_image(const SymbolAlgebra& algebra, const ModelSpec& model, unsigned k, std::uint64_t budget) {
  const KummerTorsor T = residue(algebra, model);
  const FibreClassifier cls(T, k);
  EvalReport r;
  r.k = k;
  for_each_point(model, k, true, [&](const FibrePoint& p) {
    const auto c = cls.try_classify(p.coords);
    if (!c) {
      ++r.indeterminate;
      return true;
    }
    ++r.determinate;
    if (!r.normalization_point) {
      r.normalization_point = p;
      r.normalization_class = *c;
    }
    auto& s = r.classes[*c];
    if (s.count++ == 0) s.first = p;
    return true;
  }, budget);
  return r;
}

std::string to_string(Constancy c) {
  switch (c) {
    case Constancy::ConstantCertified: return "ConstantCertified";
    case Constancy::NonconstantWitness: return "NonconstantWitness";
    case Constancy::Unknown: return "Unknown";
  }
  return "Unknown";
}

ConstancyReport is_constant_with_trivial_tau(const SymbolAlgebra& algebra, const ModelSpec& model,
                                             unsigned max_degree, std::uint64_t budget) {
  const KummerTorsor T = residue(algebra, model);
  ConstancyReport r;
  if (T.is_constant()) {
    r.verdict = Constancy::ConstantCertified;
    return r;
  }
  r.witness = nonconstancy_witness(T, max_degree, budget);
  r.verdict = r.witness.nonconstant ? Constancy::NonconstantWitness : Constancy::Unknown;
  return r;
}

std::set<ClassTuple> joint_image(const std::vector<SymbolAlgebra>& algebras, const ModelSpec& model, unsigned k,
                                 std::uint64_t budget) {
  if (algebras.empty()) return {ClassTuple{}};
  std::vector<KummerTorsor> torsors;
  std::uint64_t full = 1;
  for (const auto& A : algebras) {
    torsors.push_back(residue(A, model));
    full *= A.n;
  }
  std::vector<FibreClassifier> classifiers;
  for (const auto& T : torsors) classifiers.emplace_back(T, k);
  std::set<ClassTuple> image;
  ClassTuple tuple(algebras.size());
  for_each_point(model, k, true, [&](const FibrePoint& p) {
    for (std::size_t i = 0; i < classifiers.size(); ++i) {
      const auto c = classifiers[i].try_classify(p.coords);
      if (!c) return true;
      tuple[i] = *c;
    }
    image.insert(tuple);
    return image.size() < full;
  }, budget);
  return image;
}

bool prolific_check(const std::vector<SymbolAlgebra>& algebras, const ModelSpec& model, unsigned k,
                    std::uint64_t budget) {
  std::uint64_t full = 1;
  for (const auto& A : algebras) full *= A.n;
  const auto image = joint_image(algebras, model, k, budget);
  require(!image.empty(), ErrorKind::Empty, "no smooth determinate points over F_q");
  // The difference tuples are a translate of the image, so they are full iff the image is.
  return image.size() == full;
}

std::set<QZClass> zero_cycle_image(const SymbolAlgebra& algebra, const ModelSpec& model, unsigned max_degree,
                                   std::uint64_t budget) {
  const KummerTorsor T = residue(algebra, model);
  const auto n = static_cast<std::int64_t>(T.n());
  std::set<std::pair<std::int64_t, std::int64_t>> generators;  // (class numerator over n, degree)
  std::int64_t D = 0;
  for (unsigned d = 1; d <= max_degree; ++d) {
    const FibreClassifier cls(T, d);
    for_each_point(model, d, true, [&](const FibrePoint& p) {
      if (p.field_of_definition != d) return true;
      const auto c = cls.try_classify(p.coords);
      if (!c) return true;
      generators.insert({c->over(n), d});
      // Stop scanning this degree once every class has been seen at it.
      std::int64_t seen = 0;
      for (const auto& g : generators) seen += g.second == static_cast<std::int64_t>(d);
      return seen < n;
    }, budget);
  }
  std::set<QZClass> out{QZClass::zero()};
  if (generators.empty()) return out;
  for (const auto& g : generators) D = std::gcd(D, g.second);
  // Classes of sum m_P (c_P, d_P) in Z/n x Z/(nD); degree-0 cycles are those with second entry 0.
  const std::int64_t mod2 = n * D;
  std::set<std::pair<std::int64_t, std::int64_t>> group{{0, 0}};
  std::deque<std::pair<std::int64_t, std::int64_t>> queue{{0, 0}};
  while (!queue.empty()) {
    const auto [a, b] = queue.front();
    queue.pop_front();
    for (const auto& [c, d] : generators) {
      const std::pair<std::int64_t, std::int64_t> next{(a + c) % n, (b + d) % mod2};
      if (group.insert(next).second) queue.push_back(next);
    }
  }
  for (const auto& [a, b] : group) {
    if (b == 0) out.insert(QZClass(a, n));
  }
  return out;
}

}  // namespace brauer
