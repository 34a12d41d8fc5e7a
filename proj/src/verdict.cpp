#include "brauer/verdict.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "brauer/bounds.hpp"
#include "brauer/eval.hpp"

namespace brauer {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::NoObstructionViaProlific: return "NoObstructionViaProlific";
    case Verdict::LocalObstructionWitness: return "LocalObstructionWitness";
    case Verdict::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

namespace {

constexpr std::uint64_t kSmallPrime = std::uint64_t{1} << 16;

std::map<std::uint64_t, int> product_valuations(const std::vector<BigInt>& coefficients) {
  std::map<std::uint64_t, int> v;
  for (const auto& c : coefficients) {
    require(c != 0, ErrorKind::Domain, "coefficients must be nonzero");
    const BigInt m = c < 0 ? BigInt(-c) : c;
    require(m < BigInt(FiniteField::kMaxOrder), ErrorKind::Unsupported, "coefficient too large to factor: " + m.str());
    for (const auto& [q, e] : factorize(m.convert_to<std::uint64_t>())) v[q] += e;
  }
  return v;
}

void require_coprime(const std::vector<BigInt>& coefficients) {
  BigInt g = 0;
  for (const auto& c : coefficients) g = gcd(g, c < 0 ? BigInt(-c) : c);
  require(g == 1, ErrorKind::Domain, "coefficients must be coprime");
}

ModelSpec diagonal_model(const std::vector<BigInt>& a, unsigned degree, std::uint64_t p) {
  AmbientSpace amb = AmbientSpace::projective({"X0", "X1", "X2", "X3"});
  IntPoly f(amb.variables());
  for (std::size_t i = 0; i < 4; ++i) {
    Monomial m(4, 0);
    m[i] = degree;
    f.add_term(m, a[i]);
  }
  std::ostringstream label;
  label << "diagonal degree-" << degree << " surface";
  return ModelSpec::make(label.str(), amb, {f}, p);
}

// Regularity at the cone vertex, confirmed on the model itself when p is small.
ConditionCheck vertex_regularity(const ModelSpec& model, bool family_rule_holds, const std::string& rule) {
  ConditionCheck c{"regular model at p", family_rule_holds, "family rule", rule};
  if (model.p >= kSmallPrime || !family_rule_holds) return c;
  const auto apex = apex_variables(model);
  if (apex.size() != 1) return c;
  const FiniteField& F = FiniteField::get(model.p, 1);
  std::vector<FqElem> v(model.ambient.size(), FqElem::zero(F));
  v[apex.front()] = FqElem::one(F);
  const FibrePoint vertex = normalize_point(model.ambient, v);
  c.holds = regularity_check(model, vertex);
  c.basis = "computed";
  c.note = rule + "; checked at the vertex " + vertex.str();
  return c;
}

ConditionCheck bound_condition(std::uint64_t p, std::int64_t genus, std::int64_t N, bool published_constant) {
  ConditionCheck c{"residue field above the cone bound", false, "computed", ""};
  const BoundReport b = size_bound(genus, N);
  std::ostringstream note;
  if (published_constant) {
    const BigInt T = quartic_published_threshold();
    c.holds = BigInt(p) > T;
    note << "p = " << p << " vs 2^54+2^28+1 = " << T << " (formula value (g'+sqrt(g'^2-1))^2 = "
         << b.threshold.decimal(4) << " for g = " << genus << ", N = " << N << ")";
  } else {
    c.holds = b.satisfied_by(p);
    note << "p = " << p << " vs (g'+sqrt(g'^2-1))^2 = " << b.threshold.decimal(4) << " with g = " << genus
         << ", N = " << N << ", g' = " << b.g_prime << (b.vacuous ? " (vacuous)" : "");
  }
  c.note = note.str();
  return c;
}

bool all_hold(const std::vector<ConditionCheck>& cs) {
  return std::all_of(cs.begin(), cs.end(), [](const ConditionCheck& c) { return c.holds; });
}

// Direct path: evaluate the supplied algebras over the residue field.
void direct_evaluation(const VerdictRequest& req, VerdictReport& r) {
  if (!req.model || req.model->algebras.empty()) return;
  const ModelSpec& M = req.model->model;
  if (r.prime && M.p != *r.prime) {
    r.notes.push_back("model file is at p = " + std::to_string(M.p) + "; direct evaluation skipped");
    return;
  }
  const EvalReport e = evaluation_image(req.model->algebras.front(), M, 1, req.budget);
  std::ostringstream s;
  s << "image over F_" << M.p << " = {";
  bool first = true;
  for (const auto& c : e.image()) {
    s << (first ? "" : ", ") << c.str();
    first = false;
  }
  s << "}" << (e.constant() ? " (constant)" : "");
  r.direct_evaluation = s.str();
  if (r.verdict == Verdict::NoObstructionViaProlific) return;
  if (e.classes.size() > 1 && prolific_check(req.model->algebras, M, 1, req.budget)) {
    r.verdict = Verdict::NoObstructionViaProlific;
    r.notes.push_back("the supplied algebras are prolific at p: no obstruction from the subgroup they generate");
    return;
  }
  if (e.constant() && !e.image().front().is_zero()) {
    if (req.trivial_elsewhere) {
      r.verdict = Verdict::LocalObstructionWitness;
      r.notes.push_back("constant nonzero invariant at p; invariants at all other places certified zero by the caller");
    } else {
      r.notes.push_back("constant nonzero invariant at p; pass --trivial-elsewhere once the other places are certified");
    }
  }
}

VerdictReport diagonal_quartic(const VerdictRequest& req) {
  VerdictReport r;
  r.family = req.family;
  require(req.coefficients.size() == 4, ErrorKind::Domain, "diagonal-quartic needs four coefficients");
  require_coprime(req.coefficients);
  const auto v = product_valuations(req.coefficients);
  for (const auto& [q, e] : v) {
    if (e == 1 && q != 2) r.candidate_primes.push_back(q);
  }
  r.prime = req.prime ? req.prime : (r.candidate_primes.empty() ? std::nullopt
                                                                 : std::optional<std::uint64_t>(r.candidate_primes.back()));
  if (!r.prime) {
    r.notes.push_back("no odd prime with v_p(a0a1a2a3) = 1");
    direct_evaluation(req, r);
    return r;
  }
  const std::uint64_t p = *r.prime;
  require(is_prime(p), ErrorKind::Domain, std::to_string(p) + " is not prime");
  const int vp = v.count(p) ? v.at(p) : 0;
  const bool v1 = vp == 1 && p != 2;
  r.conditions.push_back({"v_p(a0a1a2a3) = 1", vp == 1, "computed", "v_p = " + std::to_string(vp)});
  if (vp >= 1 && p < (std::uint64_t{1} << 32) && v1) {
    r.conditions.push_back(vertex_regularity(diagonal_model(req.coefficients, 4, p), v1, "v_p(a0a1a2a3) = 1"));
  } else {
    r.conditions.push_back({"regular model at p", v1, "family rule", "v_p(a0a1a2a3) = 1"});
  }
  r.conditions.push_back({"special fibre is a cone over a smooth curve", v1, "family rule",
                          "diagonal quartic curve with unit coefficients, p odd; genus (4-1)(4-2)/2 = 3"});
  std::int64_t N = kQuarticBrOrderBound;
  std::string basis = "literature bound";
  if (req.assume_br_order) {
    N = *req.assume_br_order;
    basis = "assumed";
    r.assumed_br_order = N;
    r.notes.push_back("ASSUMED |Br X / Br Q| <= " + std::to_string(N) + " (--assume-br-order); not computed");
  }
  r.conditions.push_back({"p does not divide N", static_cast<std::uint64_t>(N) % p != 0, basis,
                          "N = " + std::to_string(N)});
  r.conditions.push_back(bound_condition(p, 3, N, !req.assume_br_order));
  r.verdict = all_hold(r.conditions) ? Verdict::NoObstructionViaProlific : Verdict::Inconclusive;
  r.notes.push_back("cone criterion: regular model, cone over a smooth genus-g curve, p not dividing N, "
                    "|F| > (g'+sqrt(g'^2-1))^2 with g' = N(g-1)+1");
  direct_evaluation(req, r);
  return r;
}

VerdictReport diagonal_cubic(const VerdictRequest& req) {
  VerdictReport r;
  r.family = req.family;
  require(req.coefficients.size() == 4, ErrorKind::Domain, "diagonal-cubic needs four coefficients");
  require_coprime(req.coefficients);
  const auto v = product_valuations(req.coefficients);
  for (const auto& [q, e] : v) {
    if (e == 1 && q != 3) r.candidate_primes.push_back(q);
  }
  r.prime = req.prime ? req.prime : (r.candidate_primes.empty() ? std::nullopt
                                                                 : std::optional<std::uint64_t>(r.candidate_primes.front()));
  if (!r.prime) {
    r.notes.push_back("no prime p != 3 with v_p(a0a1a2a3) = 1");
    return r;
  }
  const std::uint64_t p = *r.prime;
  const int vp = v.count(p) ? v.at(p) : 0;
  const bool ok = vp == 1 && p != 3;
  r.conditions.push_back({"v_p(a0a1a2a3) = 1", vp == 1, "computed", "v_p = " + std::to_string(vp)});
  r.conditions.push_back({"p does not divide 3", p != 3, "computed", ""});
  if (ok && p < (std::uint64_t{1} << 32)) {
    r.conditions.push_back(vertex_regularity(diagonal_model(req.coefficients, 3, p), ok, "v_p(a0a1a2a3) = 1"));
  } else {
    r.conditions.push_back({"regular model at p", ok, "family rule", "v_p(a0a1a2a3) = 1"});
  }
  r.conditions.push_back({"special fibre is a cone over a smooth curve", ok, "family rule",
                          "diagonal cubic curve with unit coefficients, p != 3; genus 1"});
  r.conditions.push_back({"p does not divide N", ok, "family rule",
                          "diagonal cubic surfaces with v_p(a0a1a2a3) = 1 (literature result)"});
  r.conditions.push_back(bound_condition(p, 1, req.assume_br_order.value_or(1), false));
  r.verdict = all_hold(r.conditions) ? Verdict::NoObstructionViaProlific : Verdict::Inconclusive;
  return r;
}

VerdictReport cone_cubic(const VerdictRequest& req) {
  VerdictReport r;
  r.family = req.family;
  require(req.prime.has_value(), ErrorKind::Domain, "cone-cubic needs --prime");
  require(!req.cone_f.empty() && !req.cone_g.empty(), ErrorKind::Domain, "cone-cubic needs --f and --g");
  const std::uint64_t p = *req.prime;
  r.prime = p;
  AmbientSpace amb = AmbientSpace::projective({"X0", "X1", "X2", "X3"});
  const IntPoly f = parse_poly(req.cone_f, amb.variables());
  const IntPoly g = parse_poly(req.cone_g, amb.variables());
  require(!f.uses_variable(3), ErrorKind::Domain, "f must not involve X3");
  require(f.homogeneous_weighted_degree() == 3 && g.homogeneous_weighted_degree() == 3, ErrorKind::Domain,
          "f and g must be cubic forms");
  const ModelSpec model = ModelSpec::make("cone cubic", amb, {f + g.scaled(BigInt(p))}, p);

  const std::vector<BigInt> vertex{0, 0, 0, 1};
  const BigInt g0 = g.evaluate(vertex);
  const bool regular = g0 % p != 0;
  r.conditions.push_back(vertex_regularity(model, regular, "p does not divide g(0,0,0,1) = " + g0.str()));

  // A reduced plane cubic has at most three singular points, permuted by
  // Galois, so a search over F_{p^k}, k <= 3, is exhaustive.
  ConditionCheck smooth{"special fibre is a cone over a smooth curve", false, "computed", ""};
  try {
    const ModelSpec base = cone_base(model);
    unsigned depth = 0;
    bool singular = false;
    for (unsigned k = 1; k <= 3; ++k) {
      const std::uint64_t q = FiniteField::get(p, k).order();
      if (q > req.budget / q) break;
      singular = !find_singular_points(base, k, req.budget).points.empty();
      depth = k;
      if (singular) break;
    }
    smooth.holds = !singular && depth == 3;
    smooth.note = singular ? "base cubic curve is singular"
                           : (depth == 3 ? "no singular point over F_{p^k}, k <= 3; genus 1"
                                         : "singular-point search only reached F_{p^" + std::to_string(depth) +
                                               "} within budget: not certified");
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NonIsolated && e.kind() != ErrorKind::Domain) throw;
    smooth.note = std::string("base curve rejected: ") + e.what();
  }
  r.conditions.push_back(smooth);
  r.conditions.push_back({"p does not divide N", true, "family rule", "cubic surfaces with regular cone reduction"});
  r.conditions.push_back(bound_condition(p, 1, req.assume_br_order.value_or(1), false));
  r.verdict = all_hold(r.conditions) ? Verdict::NoObstructionViaProlific : Verdict::Inconclusive;
  return r;
}

VerdictReport custom(const VerdictRequest& req) {
  VerdictReport r;
  r.family = req.family;
  require(req.model.has_value(), ErrorKind::Domain, "custom verdicts need a model file");
  const ModelSpec& M = req.model->model;
  r.prime = M.p;
  const auto apex = apex_variables(M);
  const bool cone = M.is_hypersurface() && M.ambient.all_weights_one() && M.ambient.size() == 4 && apex.size() == 1;
  r.conditions.push_back({"special fibre is a cone over a plane curve", cone, "computed",
                          cone ? "vertex direction " + M.ambient.variables()[apex.front()].name : "not a cone"});
  std::int64_t genus = -1;
  if (cone) {
    const ModelSpec base = cone_base(M);
    const int d = base.degrees().front();
    genus = static_cast<std::int64_t>(d - 1) * (d - 2) / 2;
    bool smooth_base = false;
    std::string note;
    try {
      const auto s = find_singular_points(base, 2, req.budget);
      smooth_base = s.points.empty();
      note = smooth_base ? "no singular point over F_p, F_{p^2}; genus " + std::to_string(genus) : "base curve singular";
    } catch (const Error& e) {
      note = e.what();
    }
    r.conditions.push_back({"base curve smooth", smooth_base, "computed", note});
    const FiniteField& F = FiniteField::get(M.p, 1);
    std::vector<FqElem> v(4, FqElem::zero(F));
    v[apex.front()] = FqElem::one(F);
    const bool reg = regularity_check(M, normalize_point(M.ambient, v));
    r.conditions.push_back({"regular model at p", reg, "computed", "checked at the cone vertex"});
  }
  if (req.assume_br_order) {
    const std::int64_t N = *req.assume_br_order;
    r.assumed_br_order = N;
    r.notes.push_back("ASSUMED |Br X / Br K| <= " + std::to_string(N) + " (--assume-br-order); not computed");
    r.conditions.push_back({"p does not divide N", static_cast<std::uint64_t>(N) % M.p != 0, "assumed",
                            "N = " + std::to_string(N)});
    if (genus >= 0) r.conditions.push_back(bound_condition(M.p, genus, N, false));
  } else {
    r.conditions.push_back({"p does not divide N", false, "assumed", "no Brauer-group order supplied"});
  }
  r.verdict = all_hold(r.conditions) ? Verdict::NoObstructionViaProlific : Verdict::Inconclusive;
  direct_evaluation(req, r);
  return r;
}

}  // namespace

VerdictReport run_verdict(const VerdictRequest& req) {
  if (req.family == "diagonal-quartic") return diagonal_quartic(req);
  if (req.family == "diagonal-cubic") return diagonal_cubic(req);
  if (req.family == "cone-cubic") return cone_cubic(req);
  if (req.family == "custom") return custom(req);
  fail(ErrorKind::Domain, "unknown family '" + req.family + "'");
}

}  // namespace brauer
